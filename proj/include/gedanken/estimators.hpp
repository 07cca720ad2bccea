#ifndef GEDANKEN_ESTIMATORS_HPP
#define GEDANKEN_ESTIMATORS_HPP

#include <string>

#include "gedanken/scenario.hpp"
#include "gedanken/units.hpp"

namespace gedanken::estimators {

/// Order-unity slack interval standing in for the dropped numerical factors
/// of the order-of-magnitude relations. Verdicts are bracketed by evaluating
/// at both ends.
struct Slack {
    double c_min = 0.1;
    double c_max = 10.0;
    static constexpr Slack exact() { return {1.0, 1.0}; }
};

enum class Verdict { Satisfied, Violated, Indeterminate };
std::string to_string(Verdict);

/// Which way the dimensionless ratio must fall for the criterion to hold.
enum class Sense { ExceedsThreshold, StaysBelowThreshold };
std::string to_string(Sense);

/// A dimensionless order-of-magnitude criterion: the scaled ratio c * ratio
/// is compared (strictly) against the threshold, with c swept over the slack
/// interval. Disagreement between the two ends is reported as Indeterminate.
struct Criterion {
    std::string name;
    double ratio = 0.0;      // >= 0; may be +infinity when a floor is disabled
    double threshold = 1.0;
    Slack slack;
    Sense sense = Sense::ExceedsThreshold;

    bool satisfied_at(double c) const;
    Verdict verdict() const;
};

/// Ingredient toggles for the counterfactual probes: disabling the vacuum
/// fluctuations removes the probe's localization floor; disabling quantized
/// radiation forces the emitted-quanta count to zero.
struct Assumptions {
    bool vacuum_fluctuations = true;
    bool quantized_radiation = true;
};

/// Magnitude of the vacuum fluctuation of the electric field averaged over a
/// spacetime region of size R: 1/R^2.
Quantity vacuum_field_fluctuation(const Quantity& R);

/// Magnitude of the vacuum curvature fluctuation over a region of size R,
/// 1/R^3 in Planck units (the gravitational analogue of the field case).
Quantity vacuum_curvature_fluctuation(const Quantity& R);

/// Localization floor of a free particle of charge q and mass m under
/// electromagnetic vacuum fluctuations: q/m, independent of averaging scale.
Quantity charge_radius(const Quantity& q, const Quantity& m);

enum class Particle { A, B };

/// The relevant localization floor for one of the two particles:
/// electromagnetic -> that particle's charge radius; gravitational -> one
/// Planck length regardless of the particle. Zero when vacuum fluctuations
/// are switched off.
Quantity localization_limit(const Scenario& s, Particle which,
                            const Assumptions& assume = {});

/// Displacement accumulated by Bob's released particle over T_B from the
/// static source-difference field of Alice's superposition:
///   electromagnetic: (q_B/m_B) * (M^(n)/D^(n+2)) * T_B^2
///   gravitational:            (M^(n)/D^(n+2)) * T_B^2   (Planck units)
/// at the scenario's effective multipole order n. Zero if the trap stays
/// closed.
Quantity bob_displacement(const Scenario& s);

/// Which-path criterion: Bob gains significant path information iff his
/// displacement exceeds his localization floor. The ratio equals the bare
/// combination M^(n) T_B^2 / D^(n+2) in Planck units; it is defined as 0
/// when the displacement vanishes (closed trap or neutral probe) and +inf
/// when the floor is disabled while the displacement is nonzero.
Criterion which_path_criterion(const Scenario& s, const Slack& slack = {},
                               const Assumptions& assume = {});

/// Energy radiated while the source multipole is closed over T_A:
/// (M^(n)/T_A^(n+1))^2 * T_A.
Quantity radiated_energy(const Scenario& s);

/// Number of radiated quanta (frequency ~ 1/T_A), exactly
/// radiated_energy * T_A = (M^(n)/T_A^n)^2. Zero when quantized radiation is
/// switched off.
double entangling_quanta(const Scenario& s, const Assumptions& assume = {});

/// Recoherence criterion: recombination avoids entangling radiation iff the
/// emitted-quanta count N stays below 1.
Criterion recoherence_criterion(const Scenario& s, const Slack& slack = {},
                                const Assumptions& assume = {});

/// Same criterion with a substituted closing time (used for a mirror erected
/// over T_M, which plays the role of T_A).
Criterion recoherence_criterion_with_time(const Scenario& s, const Quantity& closing_time,
                                          const Slack& slack = {},
                                          const Assumptions& assume = {});

struct SpacelikeFlags {
    bool alice = false;  // T_A < D, strictly
    bool bob = false;    // T_B < D, strictly
};

/// Strict light-cone comparisons (c = 1); the boundary T = D counts as not
/// spacelike.
SpacelikeFlags spacelike(const Scenario& s);

}  // namespace gedanken::estimators

#endif  // GEDANKEN_ESTIMATORS_HPP
