#ifndef GEDANKEN_CONSISTENCY_HPP
#define GEDANKEN_CONSISTENCY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gedanken/scenario.hpp"
#include "gedanken/sweep.hpp"

namespace gedanken::consistency {

/// Randomized-but-seeded verification that the radiation bound and the
/// path-information bound can never hold together at spacelike separation.
struct TheoremReport {
    FieldKind field = FieldKind::Electromagnetic;
    int multipole_order = 1;
    long trials = 0;
    std::uint64_t seed = 0;
    long violations = 0;
    double sup_ratio = 0.0;  // largest path-information ratio seen
    double sup_bound = 0.0;  // largest analytic bound (T_A/D)^n seen
    std::optional<Scenario> counterexample;

    bool passed() const { return violations == 0; }
};

/// Samples `trials` log-uniform scenarios with T_A < D, T_B < D and the
/// radiation criterion satisfied at slack 1, and checks that every one keeps
/// the path-information ratio strictly below 1 (and below its per-trial
/// analytic bound (T_A/D)^n). multipole_order 0 selects the leading order
/// for the field kind. Sampling is keyed per trial index, so results are
/// identical for any execution order.
TheoremReport no_paradox_theorem(FieldKind field, int multipole_order,
                                 long trials, std::uint64_t seed);

/// The two quantum-field ingredients whose removal re-opens the paradox.
enum class Ingredient { VacuumFluctuations, QuantizedRadiation };
std::string to_string(Ingredient);

/// An explicit spacelike scenario that, with the named ingredient disabled,
/// shows simultaneous path-information acquisition and successful
/// recombination — the contradiction the full theory forbids.
struct ParadoxWitness {
    Scenario scenario;
    Ingredient dropped = Ingredient::VacuumFluctuations;
    double which_path_ratio = 0.0;   // > 1 (may be +inf) with the drop applied
    double recoherence_ratio = 0.0;  // effective N < 1 with the drop applied
    bool alice_spacelike = false;
    bool bob_spacelike = false;
    std::string description;

    bool demonstrates_paradox() const;
};

ParadoxWitness counterfactual_probe(FieldKind field, Ingredient drop);

/// One point of the signaling-residue curve: the largest model signaling
/// metric over the grid restricted to D >= margin * max(T_A, T_B) with the
/// radiation criterion satisfied at slack 1.
struct CurvePoint {
    double margin = 1.0;
    double max_metric = 0.0;
    std::size_t points = 0;  // grid points surviving the restriction
    Scenario argmax;
};

/// Restrictions for growing margins are nested, so the curve can never
/// increase. Throws sweep::GridError if any margin leaves the grid empty.
std::vector<CurvePoint> signaling_sweep(const std::vector<double>& margins,
                                        const sweep::GridSpec& grid);

std::string to_json(const TheoremReport& report, int indent = 2);
std::string to_json(const ParadoxWitness& witness, int indent = 2);
std::string curve_to_csv(const std::vector<CurvePoint>& curve);
std::string curve_to_json(const std::vector<CurvePoint>& curve, int indent = 2);

}  // namespace gedanken::consistency

#endif  // GEDANKEN_CONSISTENCY_HPP
