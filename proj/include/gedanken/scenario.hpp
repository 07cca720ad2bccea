#ifndef GEDANKEN_SCENARIO_HPP
#define GEDANKEN_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "gedanken/units.hpp"

namespace gedanken {

enum class FieldKind { Electromagnetic, Gravitational };

std::string to_string(FieldKind);

/// Reflecting enclosure around the source party's apparatus: either present
/// for the whole run, or erected over a finite time once the protocol starts.
enum class MirrorTiming { AlwaysPresent, ErectedDuring };

struct MirrorConfig {
    MirrorTiming timing = MirrorTiming::AlwaysPresent;
    Quantity radius = pq::length(1);  // R_M
    /// Required (and only meaningful) for ErectedDuring.
    std::optional<Quantity> erection_time;  // T_M
};

/// Full experiment configuration, all values in Planck units. Alice holds the
/// superposed source particle (separation d, recombination time T_A); Bob
/// holds the trapped probe particle at distance D with trap-open time T_B.
struct Scenario {
    FieldKind field = FieldKind::Electromagnetic;

    Quantity q_A = pq::charge(0);
    Quantity q_B = pq::charge(0);
    Quantity m_A = pq::mass(1);
    Quantity m_B = pq::mass(1);

    Quantity d = pq::length(1);     // superposition separation
    Quantity D = pq::length(100);   // Alice-Bob distance
    Quantity T_A = pq::duration(1); // recombination duration
    Quantity T_B = pq::duration(1); // trap-open duration

    bool bob_opens = true;
    /// Leading source multipole order n: 1 = dipole, 2 = quadrupole, ...
    /// 0 selects the leading nonvanishing order for the field kind
    /// (1 electromagnetic; 2 gravitational, the dipole being cancelled by
    /// laboratory recoil).
    int multipole_order = 0;

    std::optional<MirrorConfig> mirror;

    /// "d much smaller than D" cutoff: require d/D <= this.
    double d_over_D_max = 0.1;

    int effective_multipole_order() const {
        if (multipole_order != 0) return multipole_order;
        return field == FieldKind::Electromagnetic ? 1 : 2;
    }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string joined(const char* sep = "; ") const;
};

/// Checks every Scenario invariant; violations are data, not exceptions.
ValidationReport validate(const Scenario& s);

/// Effective source-difference multipole moments of the superposition.
/// Electromagnetic: the n-th moment is q_A * d^n. Gravitational: the dipole
/// vanishes identically (the laboratory recoils to conserve the system's
/// center of mass), so the ladder starts at the quadrupole m_A * d^2 and the
/// n-th moment is m_A * d^n for n >= 2. The infinite-laboratory-mass limit
/// fixes the coefficient to exactly 1.
class MomentLadder {
public:
    MomentLadder(FieldKind field, Quantity source, Quantity separation);

    Quantity dipole() const { return moment(1); }
    Quantity quadrupole() const { return moment(2); }
    /// n >= 1; the gravitational n = 1 entry is exactly zero.
    Quantity moment(int n) const;

private:
    FieldKind field_;
    Quantity source_;  // q_A (charge) or m_A (mass)
    Quantity d_;
};

MomentLadder moments(const Scenario& s);

}  // namespace gedanken

#endif  // GEDANKEN_SCENARIO_HPP
