#include "gedanken/quantum_model.hpp"

#include <cmath>

namespace gedanken::quantum_model {

namespace {

/// Scales a packet pair's displacement by the slack constant and folds both
/// overlap factors into gamma. sigma stays fixed: the floor is not an
/// order-of-magnitude estimate in this model, the displacement is.
double gamma_at(double c, double n_diff, const BobPacketPair& packets,
                bool trap_open) {
    double g = field_overlap(FieldLabel{c * n_diff});
    if (trap_open) {
        BobPacketPair scaled{packets.delta_x * c, packets.sigma};
        g *= bob_overlap(scaled);
    }
    return g;
}

}  // namespace

double field_overlap(const FieldLabel& label) {
    if (label.n_diff < 0) throw DomainError("difference quantum number must be >= 0");
    return std::exp(-label.n_diff / 2.0);
}

double bob_overlap(const BobPacketPair& p) {
    double dx = p.delta_x.value();
    double sigma = p.sigma.value();
    if (sigma < 0) throw DomainError("wavepacket width must be >= 0");
    if (sigma == 0) return dx == 0 ? 1.0 : 0.0;
    double u = dx / sigma;
    return std::exp(-u * u / 8.0);
}

BobPacketPair bob_packets(const Scenario& s, const Assumptions& assume,
                          const std::optional<Quantity>& sigma_override) {
    Quantity floor = estimators::localization_limit(s, estimators::Particle::B, assume);
    Quantity sigma = floor;
    if (sigma_override) {
        if (*sigma_override < floor)
            throw DomainError("wavepacket width override is below the localization floor");
        sigma = *sigma_override;
    }
    return BobPacketPair{estimators::bob_displacement(s), sigma};
}

AliceReducedState reduce_alice(const Scenario& s, const Slack& slack,
                               const Assumptions& assume,
                               const std::optional<Quantity>& sigma_override) {
    double n = estimators::entangling_quanta(s, assume);
    BobPacketPair packets = bob_packets(s, assume, sigma_override);

    AliceReducedState state;
    state.gamma = gamma_at(1.0, n, packets, s.bob_opens);
    // gamma decreases in both estimates, so the interval ends swap:
    state.gamma_max = gamma_at(slack.c_min, n, packets, s.bob_opens);
    state.gamma_min = gamma_at(slack.c_max, n, packets, s.bob_opens);
    return state;
}

Complementarity complementarity_check(const Scenario& s, const Assumptions& assume,
                                      const std::optional<Quantity>& sigma_override) {
    AliceReducedState state = reduce_alice(s, Slack::exact(), assume, sigma_override);
    Complementarity c;
    c.visibility = state.gamma;
    c.distinguishability = std::sqrt(1.0 - c.visibility * c.visibility);
    c.defect = std::fabs(c.visibility * c.visibility +
                         c.distinguishability * c.distinguishability - 1.0);
    return c;
}

SignalingProbe signaling_metric(const Scenario& s, const Assumptions& assume,
                                const std::optional<Quantity>& sigma_override) {
    double n = estimators::entangling_quanta(s, assume);
    // Displacement is evaluated as if the trap were open: the metric compares
    // the two branches of Bob's choice.
    Scenario opened = s;
    opened.bob_opens = true;
    BobPacketPair packets = bob_packets(opened, assume, sigma_override);

    SignalingProbe probe;
    probe.metric = field_overlap(FieldLabel{n}) * (1.0 - bob_overlap(packets));
    auto flags = estimators::spacelike(s);
    probe.alice_spacelike = flags.alice;
    probe.bob_spacelike = flags.bob;
    return probe;
}

}  // namespace gedanken::quantum_model
