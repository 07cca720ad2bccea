#ifndef GEDANKEN_QUANTUM_MODEL_HPP
#define GEDANKEN_QUANTUM_MODEL_HPP

#include <optional>

#include "gedanken/estimators.hpp"
#include "gedanken/scenario.hpp"

namespace gedanken::quantum_model {

using estimators::Assumptions;
using estimators::Slack;

/// The radiation record of the recombination, labelled by the mean quantum
/// number of the difference coherent state between the two branches' field
/// states.
struct FieldLabel {
    double n_diff = 0.0;  // >= 0
};

/// |<vacuum | difference coherent state>| = exp(-N/2): the magnitude of the
/// overlap between the two branches' field states.
double field_overlap(const FieldLabel& label);

/// Bob's released wavepacket, one Gaussian per branch of the source: centers
/// separated by delta_x, common width sigma.
struct BobPacketPair {
    Quantity delta_x = pq::length(0);
    Quantity sigma = pq::length(1);
};

/// Overlap of the two equal-width Gaussians: exp(-delta_x^2 / (8 sigma^2)).
/// With sigma = 0 (floor disabled) any nonzero displacement is perfectly
/// resolvable: the overlap is 1 for delta_x = 0 and 0 otherwise.
double bob_overlap(const BobPacketPair& p);

/// Builds Bob's packet pair from the scenario: delta_x from the displacement
/// estimate (at slack 1), sigma pinned to the localization floor unless a
/// wider override is given. An override narrower than the floor violates the
/// floor invariant and throws.
BobPacketPair bob_packets(const Scenario& s, const Assumptions& assume = {},
                          const std::optional<Quantity>& sigma_override = {});

/// Off-diagonal coherence of Alice's reduced 2x2 path density matrix
/// rho = 1/2 [[1, gamma], [gamma, 1]] (phase dropped, gamma = |gamma|), plus
/// the order-unity slack interval propagated onto it.
struct AliceReducedState {
    double gamma = 1.0;
    double gamma_min = 1.0;  // at the pessimistic slack end
    double gamma_max = 1.0;  // at the optimistic slack end
    double visibility() const { return gamma; }
    double purity() const { return 0.5 * (1.0 + gamma * gamma); }
};

/// Traces out the field record and Bob's packet label:
/// gamma = field_overlap(N) * (trap open ? bob_overlap : 1).
AliceReducedState reduce_alice(const Scenario& s, const Slack& slack = {},
                               const Assumptions& assume = {},
                               const std::optional<Quantity>& sigma_override = {});

struct Complementarity {
    double visibility = 1.0;
    double distinguishability = 0.0;
    double defect = 0.0;  // |V^2 + D^2 - 1|, identically 0 for a pure global state
};

/// Visibility from Alice's reduced coherence; distinguishability carried
/// jointly by the field record and Bob's packets, sqrt(1 - V^2) since the
/// global state stays pure.
Complementarity complementarity_check(const Scenario& s,
                                      const Assumptions& assume = {},
                                      const std::optional<Quantity>& sigma_override = {});

struct SignalingProbe {
    /// |gamma(trap open) - gamma(trap closed)| = field_overlap * (1 - bob_overlap):
    /// how much Bob's choice can move Alice's coherence in this model.
    double metric = 0.0;
    bool alice_spacelike = false;
    bool bob_spacelike = false;
};

/// Computed at slack 1 regardless of the scenario's bob_opens setting (the
/// metric is the counterfactual difference across that choice). Non-spacelike
/// configurations are flagged, not rejected.
SignalingProbe signaling_metric(const Scenario& s, const Assumptions& assume = {},
                                const std::optional<Quantity>& sigma_override = {});

}  // namespace gedanken::quantum_model

#endif  // GEDANKEN_QUANTUM_MODEL_HPP
