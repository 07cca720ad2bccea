#ifndef GEDANKEN_CLASSIFIER_HPP
#define GEDANKEN_CLASSIFIER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gedanken/estimators.hpp"
#include "gedanken/quantum_model.hpp"
#include "gedanken/scenario.hpp"

namespace gedanken::classifier {

using estimators::Criterion;
using estimators::Slack;
using estimators::Verdict;

/// Scenario failed validation; carries the full violation list.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string what, ValidationReport report)
        : std::runtime_error(std::move(what)), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Configuration outside the analyzed regime (e.g. a mirror around a
/// gravitational source, for which no analysis is defined).
class UnsupportedConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Outcome {
    AliceRecoheres_NoWhichPath,
    AliceDecoheres_BobInnocentBystander,
    AliceDecoheres_BobCulprit,
    AliceRecoheres_BobShielded,
    Indeterminate,
};

std::string to_string(Outcome);

struct NamedCriterion {
    std::string name;
    Criterion criterion;
    Verdict verdict;
};

struct OutcomeReport {
    Outcome outcome = Outcome::Indeterminate;
    Slack slack;
    std::vector<NamedCriterion> criteria;
    estimators::SpacelikeFlags spacelike;
    quantum_model::AliceReducedState alice;
    quantum_model::Complementarity model;
    double signaling_metric = 0.0;
    std::string narrative;
};

/// Maps any valid scenario to exactly one outcome. Throws ValidationError if
/// validate(s) reports violations; otherwise total. Mirror configurations are
/// routed through classify_mirror.
OutcomeReport classify(const Scenario& s, const Slack& slack = {},
                       const std::optional<Quantity>& sigma_override = {});

/// Mirror-case decision table (electromagnetic only):
///   always present, R_M < D  -> source screened, recoherence succeeds;
///   always present, R_M > D  -> probe inside the enclosure: culprit if the
///                                released probe resolves the source;
///   erected over T_M, R_M < D -> non-adiabatic erection radiates to
///                                infinity (T_M plays the role of T_A);
///                                adiabatic erection screens as above;
///   erected over T_M, R_M > D -> as the always-present R_M > D case.
/// Throws UnsupportedConfiguration for a gravitational scenario or a missing
/// mirror config.
OutcomeReport classify_mirror(const Scenario& s, const Slack& slack = {},
                              const std::optional<Quantity>& sigma_override = {});

/// Stable-keyed JSON rendering of a report (pretty-printed when indent >= 0).
std::string to_json(const OutcomeReport& report, int indent = 2);

}  // namespace gedanken::classifier

#endif  // GEDANKEN_CLASSIFIER_HPP
