#include "gedanken/estimators.hpp"

#include <cmath>
#include <limits>

namespace gedanken::estimators {

namespace {

/// Newton's constant as a Planck-unit quantity (value 1, dimension
/// length/mass). Multiplying a gravitational estimate by the right power of
/// this restores the physical dimension that the G = 1 shorthand hides,
/// so displacements come out as lengths and energies as energies for both
/// field kinds.
const Quantity kNewtonG = Quantity::planck(1.0, dim::length.per(dim::mass));

Quantity source_moment(const Scenario& s) {
    return moments(s).moment(s.effective_multipole_order());
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Satisfied: return "satisfied";
        case Verdict::Violated: return "violated";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string to_string(Sense s) {
    return s == Sense::ExceedsThreshold ? "exceeds_threshold" : "stays_below_threshold";
}

bool Criterion::satisfied_at(double c) const {
    double scaled = c * ratio;
    return sense == Sense::ExceedsThreshold ? scaled > threshold
                                            : scaled < threshold;
}

Verdict Criterion::verdict() const {
    bool lo = satisfied_at(slack.c_min);
    bool hi = satisfied_at(slack.c_max);
    if (lo && hi) return Verdict::Satisfied;
    if (!lo && !hi) return Verdict::Violated;
    return Verdict::Indeterminate;
}

Quantity vacuum_field_fluctuation(const Quantity& R) {
    if (!(R.value() > 0)) throw DomainError("averaging scale R must be positive");
    return Quantity::planck(1.0, dim::none) / (R * R);
}

Quantity vacuum_curvature_fluctuation(const Quantity& R) {
    if (!(R.value() > 0)) throw DomainError("averaging scale R must be positive");
    return pq::length(1.0) / (R * R * R);
}

Quantity charge_radius(const Quantity& q, const Quantity& m) {
    if (!(m.value() > 0)) throw DomainError("mass must be positive");
    return q / m;
}

Quantity localization_limit(const Scenario& s, Particle which,
                            const Assumptions& assume) {
    if (!assume.vacuum_fluctuations)
        return pq::length(0.0);
    if (s.field == FieldKind::Gravitational)
        return pq::length(1.0);  // one Planck length, any particle
    return which == Particle::A ? charge_radius(s.q_A, s.m_A)
                                : charge_radius(s.q_B, s.m_B);
}

Quantity bob_displacement(const Scenario& s) {
    int n = s.effective_multipole_order();
    Quantity zero_length = pq::length(0.0);
    if (!s.bob_opens) return zero_length;

    Quantity field_factor = source_moment(s) / s.D.pow(n + 2);
    Quantity dx = field_factor * s.T_B * s.T_B;
    if (s.field == FieldKind::Electromagnetic)
        return charge_radius(s.q_B, s.m_B) * dx;
    return kNewtonG * dx;
}

Criterion which_path_criterion(const Scenario& s, const Slack& slack,
                               const Assumptions& assume) {
    Criterion c{"which_path", 0.0, 1.0, slack, Sense::ExceedsThreshold};
    Quantity dx = bob_displacement(s);
    Quantity floor = localization_limit(s, Particle::B, assume);
    if (dx.value() == 0)
        c.ratio = 0.0;
    else if (floor.value() == 0)
        c.ratio = std::numeric_limits<double>::infinity();
    else
        c.ratio = (dx / floor).dimensionless();
    return c;
}

Quantity radiated_energy(const Scenario& s) {
    int n = s.effective_multipole_order();
    Quantity amplitude = source_moment(s) / s.T_A.pow(n + 1);
    Quantity e = amplitude * amplitude * s.T_A;
    if (s.field == FieldKind::Gravitational) e = kNewtonG * e;
    return e;
}

double entangling_quanta(const Scenario& s, const Assumptions& assume) {
    if (!assume.quantized_radiation) return 0.0;
    // Quanta of frequency ~ 1/T_A: N = E * T_A, kept as the exact product so
    // the identity with radiated_energy holds bit-for-bit.
    return (radiated_energy(s) * s.T_A).dimensionless();
}

Criterion recoherence_criterion(const Scenario& s, const Slack& slack,
                                const Assumptions& assume) {
    return Criterion{"recoherence", entangling_quanta(s, assume), 1.0, slack,
                     Sense::StaysBelowThreshold};
}

Criterion recoherence_criterion_with_time(const Scenario& s,
                                          const Quantity& closing_time,
                                          const Slack& slack,
                                          const Assumptions& assume) {
    Scenario sub = s;
    sub.T_A = closing_time;
    Criterion c = recoherence_criterion(sub, slack, assume);
    c.name = "recoherence_at_substituted_time";
    return c;
}

SpacelikeFlags spacelike(const Scenario& s) {
    return SpacelikeFlags{s.T_A < s.D, s.T_B < s.D};
}

}  // namespace gedanken::estimators
