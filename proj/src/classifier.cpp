#include "gedanken/classifier.hpp"

#include <cmath>
#include <json.hpp>

namespace gedanken::classifier {

using estimators::Criterion;
using estimators::Sense;
using estimators::Verdict;

namespace {

NamedCriterion named(const Criterion& c) {
    return NamedCriterion{c.name, c, c.verdict()};
}

struct Decision {
    Outcome outcome;
    std::string narrative;
};

Decision decide_plain(const Scenario& s, const NamedCriterion& rec,
                      const NamedCriterion& wp,
                      const estimators::SpacelikeFlags& flags) {
    if (rec.verdict == Verdict::Indeterminate)
        return {Outcome::Indeterminate,
                "The slack bracket disagrees on the radiation criterion; at "
                "order-of-magnitude precision the outcome near this boundary "
                "is not adjudicable."};

    if (rec.verdict == Verdict::Violated)
        return {Outcome::AliceDecoheres_BobInnocentBystander,
                "The recombination is too fast for the source moment: "
                "entangling radiation escapes and recoherence fails "
                "regardless of the probe. Opening the trap merely "
                "re-entangles the probe with field records that already "
                "exist; the probe party is an innocent bystander."};

    // Radiation avoided. Inside Alice's light cone nothing Bob does can
    // reach her before she finishes.
    if (flags.alice)
        return {Outcome::AliceRecoheres_NoWhichPath,
                "Main case: both parties act at spacelike separation and the "
                "source moment is small enough to close adiabatically. No "
                "entangling radiation is emitted, and the probe cannot "
                "resolve the source difference in the allotted time; "
                "recoherence succeeds."};

    // Slow closing (T_A >= D): the source difference persists long enough
    // for the probe to couple to it, so the probe's choice matters.
    if (s.bob_opens) {
        if (wp.verdict == Verdict::Satisfied)
            return {Outcome::AliceDecoheres_BobCulprit,
                    "Extended case: the recombination is slow enough to avoid "
                    "radiation, but it extends past the light-crossing time "
                    "and the released probe resolves the persistent source "
                    "difference. The initially false decoherence becomes "
                    "true: the probe party causes the failure."};
        if (wp.verdict == Verdict::Indeterminate)
            return {Outcome::Indeterminate,
                    "The slack bracket disagrees on the path-information "
                    "criterion, which decides this slow-closing case; the "
                    "outcome is not adjudicable at this precision."};
    }
    return {Outcome::AliceRecoheres_NoWhichPath,
            "Slow closing without an effective probe: no entangling "
            "radiation is emitted and the probe either stays trapped or is "
            "too weakly coupled to resolve the source difference; "
            "recoherence succeeds."};
}

OutcomeReport assemble(const Scenario& s, const Slack& slack,
                       const std::optional<Quantity>& sigma_override,
                       std::vector<NamedCriterion> criteria,
                       const Decision& decision) {
    OutcomeReport report;
    report.outcome = decision.outcome;
    report.slack = slack;
    report.criteria = std::move(criteria);
    report.spacelike = estimators::spacelike(s);
    report.alice = quantum_model::reduce_alice(s, slack, {}, sigma_override);
    report.model = quantum_model::complementarity_check(s, {}, sigma_override);
    report.signaling_metric =
        quantum_model::signaling_metric(s, {}, sigma_override).metric;
    report.narrative = decision.narrative;
    return report;
}

}  // namespace

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::AliceRecoheres_NoWhichPath:
            return "alice_recoheres_no_which_path";
        case Outcome::AliceDecoheres_BobInnocentBystander:
            return "alice_decoheres_bob_innocent_bystander";
        case Outcome::AliceDecoheres_BobCulprit:
            return "alice_decoheres_bob_culprit";
        case Outcome::AliceRecoheres_BobShielded:
            return "alice_recoheres_bob_shielded";
        case Outcome::Indeterminate:
            return "indeterminate";
    }
    return "?";
}

OutcomeReport classify(const Scenario& s, const Slack& slack,
                       const std::optional<Quantity>& sigma_override) {
    ValidationReport v = validate(s);
    if (!v.ok())
        throw ValidationError("invalid scenario: " + v.joined(), v);

    if (s.mirror) return classify_mirror(s, slack, sigma_override);

    NamedCriterion rec = named(estimators::recoherence_criterion(s, slack));
    NamedCriterion wp = named(estimators::which_path_criterion(s, slack));
    auto flags = estimators::spacelike(s);
    Decision decision = decide_plain(s, rec, wp, flags);
    return assemble(s, slack, sigma_override, {rec, wp}, decision);
}

OutcomeReport classify_mirror(const Scenario& s, const Slack& slack,
                              const std::optional<Quantity>& sigma_override) {
    if (!s.mirror)
        throw UnsupportedConfiguration("classify_mirror requires a mirror config");
    if (s.field != FieldKind::Electromagnetic)
        throw UnsupportedConfiguration(
            "mirror analysis is only defined for the electromagnetic field kind");
    ValidationReport v = validate(s);
    if (!v.ok())
        throw ValidationError("invalid scenario: " + v.joined(), v);

    const MirrorConfig& mirror = *s.mirror;
    NamedCriterion rec = named(estimators::recoherence_criterion(s, slack));
    NamedCriterion wp = named(estimators::which_path_criterion(s, slack));
    std::vector<NamedCriterion> criteria{rec, wp};

    if (mirror.timing == MirrorTiming::ErectedDuring) {
        NamedCriterion erection = named(estimators::recoherence_criterion_with_time(
            s, *mirror.erection_time, slack));
        criteria.push_back(erection);
        if (erection.verdict == Verdict::Violated)
            return assemble(
                s, slack, sigma_override, std::move(criteria),
                {Outcome::AliceDecoheres_BobInnocentBystander,
                 "Mirror case: raising the enclosure in a time short against "
                 "the source moment makes the moment time-dependent and "
                 "radiates entangling quanta to infinity before the "
                 "enclosure closes; the erection time plays the role of the "
                 "recombination time, and the probe is an innocent "
                 "bystander."});
        if (erection.verdict == Verdict::Indeterminate)
            return assemble(s, slack, sigma_override, std::move(criteria),
                            {Outcome::Indeterminate,
                             "The slack bracket disagrees on the "
                             "enclosure-erection radiation criterion; the "
                             "outcome is not adjudicable at this precision."});
        // Adiabatic erection: the enclosure is in place without having
        // radiated; fall through to the geometric cases.
    }

    if (mirror.radius < s.D)
        return assemble(s, slack, sigma_override, std::move(criteria),
                        {Outcome::AliceRecoheres_BobShielded,
                         "Mirror case: the enclosure sits inside the probe "
                         "distance, reflects the emitted field back for "
                         "recapture, and screens the source difference from "
                         "the probe; recoherence succeeds and no path "
                         "information leaks out."});

    // Probe inside the enclosure: the source difference stays visible to it
    // for as long as the enclosure holds the field, as in slow closing.
    if (s.bob_opens) {
        if (wp.verdict == Verdict::Satisfied)
            return assemble(s, slack, sigma_override, std::move(criteria),
                            {Outcome::AliceDecoheres_BobCulprit,
                             "Mirror case: the enclosure reaches beyond the "
                             "probe, so the probe couples to the contained "
                             "source difference and resolves it; the probe "
                             "party causes the decoherence, as in the "
                             "slow-closing case."});
        if (wp.verdict == Verdict::Indeterminate)
            return assemble(s, slack, sigma_override, std::move(criteria),
                            {Outcome::Indeterminate,
                             "The slack bracket disagrees on the "
                             "path-information criterion, which decides this "
                             "enclosed-probe case; the outcome is not "
                             "adjudicable at this precision."});
    }
    return assemble(s, slack, sigma_override, std::move(criteria),
                    {Outcome::AliceRecoheres_NoWhichPath,
                     "Mirror case: the enclosure reaches beyond the probe, "
                     "but the probe stays trapped or is too weakly coupled "
                     "to resolve the source difference; the reflected field "
                     "is recaptured and recoherence succeeds."});
}

std::string to_json(const OutcomeReport& report, int indent) {
    using nlohmann::json;
    auto finite = [](double x) -> json {
        if (std::isfinite(x)) return x;
        return x > 0 ? "infinity" : "-infinity";
    };

    json criteria = json::array();
    for (const auto& nc : report.criteria) {
        criteria.push_back(json{
            {"name", nc.name},
            {"ratio", finite(nc.criterion.ratio)},
            {"threshold", nc.criterion.threshold},
            {"sense", estimators::to_string(nc.criterion.sense)},
            {"verdict", estimators::to_string(nc.verdict)},
        });
    }

    json j{
        {"outcome", to_string(report.outcome)},
        {"slack", {{"min", report.slack.c_min}, {"max", report.slack.c_max}}},
        {"criteria", criteria},
        {"spacelike",
         {{"alice", report.spacelike.alice}, {"bob", report.spacelike.bob}}},
        {"model",
         {{"gamma", report.alice.gamma},
          {"gamma_min", report.alice.gamma_min},
          {"gamma_max", report.alice.gamma_max},
          {"visibility", report.model.visibility},
          {"distinguishability", report.model.distinguishability},
          {"defect", report.model.defect},
          {"signaling_metric", report.signaling_metric}}},
        {"narrative", report.narrative},
    };
    return j.dump(indent);
}

}  // namespace gedanken::classifier
