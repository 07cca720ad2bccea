#include "gedanken/scenario.hpp"

#include <cmath>
#include <cstdio>

namespace gedanken {

std::string to_string(FieldKind f) {
    return f == FieldKind::Electromagnetic ? "electromagnetic" : "gravitational";
}

std::string ValidationReport::joined(const char* sep) const {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += sep;
        out += v;
    }
    return out;
}

namespace {

bool positive_finite(const Quantity& q) {
    return std::isfinite(q.value()) && q.value() > 0;
}

}  // namespace

ValidationReport validate(const Scenario& s) {
    ValidationReport r;
    auto flag = [&](const std::string& msg) { r.violations.push_back(msg); };

    if (!positive_finite(s.d)) flag("separation d must be positive and finite");
    if (!positive_finite(s.D)) flag("distance D must be positive and finite");
    if (!positive_finite(s.T_A)) flag("recombination time T_A must be positive and finite");
    if (!positive_finite(s.T_B)) flag("trap-open time T_B must be positive and finite");
    if (!positive_finite(s.m_A)) flag("mass m_A must be positive and finite");
    if (!positive_finite(s.m_B)) flag("mass m_B must be positive and finite");
    if (!std::isfinite(s.q_A.value()) || s.q_A.value() < 0)
        flag("charge q_A must be nonnegative and finite");
    if (!std::isfinite(s.q_B.value()) || s.q_B.value() < 0)
        flag("charge q_B must be nonnegative and finite");

    if (!(s.d_over_D_max > 0) || s.d_over_D_max >= 1)
        flag("d_over_D_max must lie in (0, 1)");
    else if (positive_finite(s.d) && positive_finite(s.D) &&
             s.d.value() > s.d_over_D_max * s.D.value()) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "requires D >> d: d/D = %g exceeds the cutoff %g",
                      s.d.value() / s.D.value(), s.d_over_D_max);
        flag(buf);
    }

    if (s.field == FieldKind::Gravitational) {
        if (s.q_A.value() != 0 || s.q_B.value() != 0)
            flag("gravitational version requires q_A = q_B = 0");
        if (s.multipole_order != 0 && s.multipole_order < 2)
            flag("gravitational multipole order must be >= 2 (the dipole vanishes)");
        if (s.mirror)
            flag("mirror analysis is only defined for the electromagnetic field kind");
    } else {
        if (s.multipole_order < 0 || (s.multipole_order != 0 && s.multipole_order < 1))
            flag("electromagnetic multipole order must be >= 1");
    }

    if (s.mirror) {
        if (!positive_finite(s.mirror->radius))
            flag("mirror radius R_M must be positive and finite");
        if (s.mirror->timing == MirrorTiming::ErectedDuring) {
            if (!s.mirror->erection_time)
                flag("erected mirror requires an erection time T_M");
            else if (!positive_finite(*s.mirror->erection_time))
                flag("mirror erection time T_M must be positive and finite");
        }
    }

    return r;
}

MomentLadder::MomentLadder(FieldKind field, Quantity source, Quantity separation)
    : field_(field), source_(source), d_(separation) {}

Quantity MomentLadder::moment(int n) const {
    if (n < 1) throw DomainError("multipole order must be >= 1");
    if (field_ == FieldKind::Gravitational && n == 1) {
        // Laboratory recoil holds the center of mass fixed: the two branches
        // have identical first mass moments, so the difference is exactly 0.
        return Quantity::planck(0.0, dim::mass.times(dim::length));
    }
    return source_ * d_.pow(n);
}

MomentLadder moments(const Scenario& s) {
    Quantity source =
        s.field == FieldKind::Electromagnetic ? s.q_A : s.m_A;
    return MomentLadder(s.field, source, s.d);
}

}  // namespace gedanken
