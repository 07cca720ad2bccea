#include "gedanken/consistency.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "gedanken/estimators.hpp"
#include "gedanken/quantum_model.hpp"

namespace gedanken::consistency {

namespace {

using estimators::Assumptions;
using estimators::Slack;
using estimators::Verdict;

/// splitmix64 output for one position of the stream keyed by `seed`. Keying
/// by absolute position makes every draw independent of evaluation order, so
/// reports are reproducible under any parallel schedule.
std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t position) {
    std::uint64_t z = seed + (position + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_at(std::uint64_t seed, std::uint64_t position) {
    return (splitmix_at(seed, position) >> 11) * 0x1.0p-53;  // [0, 1)
}

double log_uniform(double lo, double hi, double u) {
    return lo * std::pow(hi / lo, u);
}

constexpr int kDrawsPerTrial = 4;

/// One spacelike, radiation-safe sample: D over six decades, T_A and T_B as
/// sub-unity fractions of D, and the source moment as a sub-unity fraction
/// of T_A^n (so the radiation criterion holds at slack 1 by construction).
Scenario sample_scenario(FieldKind field, int n, std::uint64_t seed, long trial) {
    std::uint64_t base = static_cast<std::uint64_t>(trial) * kDrawsPerTrial;
    double D = log_uniform(1.0, 1e6, unit_at(seed, base + 0));
    double f_A = log_uniform(1e-6, 1.0, unit_at(seed, base + 1));
    double f_B = log_uniform(1e-6, 1.0, unit_at(seed, base + 2));
    double g = log_uniform(1e-6, 1.0, unit_at(seed, base + 3));

    double T_A = f_A * D;
    double d = 1e-3 * D;
    double moment = g * std::pow(T_A, n);

    Scenario s;
    s.field = field;
    s.multipole_order = n;
    s.D = pq::length(D);
    s.d = pq::length(d);
    s.T_A = pq::duration(T_A);
    s.T_B = pq::duration(f_B * D);
    if (field == FieldKind::Electromagnetic) {
        s.q_A = pq::charge(moment / std::pow(d, n));
        s.q_B = pq::charge(1);
        s.m_A = pq::mass(1);
        s.m_B = pq::mass(1);
    } else {
        s.q_A = pq::charge(0);
        s.q_B = pq::charge(0);
        s.m_A = pq::mass(moment / std::pow(d, n));
        s.m_B = pq::mass(1);
    }
    return s;
}

nlohmann::json scenario_to_json(const Scenario& s) {
    return nlohmann::json{
        {"field", gedanken::to_string(s.field)},
        {"q_A", s.q_A.value()},
        {"q_B", s.q_B.value()},
        {"m_A", s.m_A.value()},
        {"m_B", s.m_B.value()},
        {"d", s.d.value()},
        {"D", s.D.value()},
        {"T_A", s.T_A.value()},
        {"T_B", s.T_B.value()},
        {"bob_opens", s.bob_opens},
        {"multipole_order", s.effective_multipole_order()},
    };
}

nlohmann::json finite_or_string(double x) {
    if (std::isfinite(x)) return x;
    return x > 0 ? "infinity" : "-infinity";
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(Ingredient i) {
    return i == Ingredient::VacuumFluctuations ? "vacuum_fluctuations"
                                               : "quantized_radiation";
}

TheoremReport no_paradox_theorem(FieldKind field, int multipole_order,
                                 long trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be >= 1");
    int n = multipole_order;
    if (n == 0) n = (field == FieldKind::Electromagnetic) ? 1 : 2;
    if (n < 1 || (field == FieldKind::Gravitational && n < 2))
        throw DomainError("multipole order out of range for the field kind");

    TheoremReport report;
    report.field = field;
    report.multipole_order = n;
    report.trials = trials;
    report.seed = seed;

    for (long t = 0; t < trials; ++t) {
        Scenario s = sample_scenario(field, n, seed, t);

        auto rec = estimators::recoherence_criterion(s, Slack::exact());
        auto wp = estimators::which_path_criterion(s, Slack::exact());
        double bound = std::pow(s.T_A.value() / s.D.value(), n);

        if (wp.ratio > report.sup_ratio) report.sup_ratio = wp.ratio;
        if (bound > report.sup_bound) report.sup_bound = bound;

        bool spacelike_ok = estimators::spacelike(s).alice &&
                            estimators::spacelike(s).bob;
        bool premise = spacelike_ok && rec.verdict() == Verdict::Satisfied;
        if (!premise || wp.ratio >= 1.0) {
            ++report.violations;
            if (!report.counterexample) report.counterexample = s;
        }
    }
    return report;
}

bool ParadoxWitness::demonstrates_paradox() const {
    return which_path_ratio > 1.0 && recoherence_ratio < 1.0 &&
           alice_spacelike && bob_spacelike;
}

ParadoxWitness counterfactual_probe(FieldKind field, Ingredient drop) {
    Scenario s;
    s.field = field;
    s.D = pq::length(1);
    s.d = pq::length(0.05);
    s.m_B = pq::mass(1);
    s.bob_opens = true;

    Assumptions assume;
    std::string description;
    if (drop == Ingredient::VacuumFluctuations) {
        assume.vacuum_fluctuations = false;
        // Adiabatic regime: radiation is genuinely avoided, and without a
        // localization floor even a tiny probe displacement reads out the
        // path.
        s.T_A = pq::duration(0.5);
        s.T_B = pq::duration(0.5);
        if (field == FieldKind::Electromagnetic) {
            s.q_A = pq::charge(5);   // source moment 0.25 = T_A/2
            s.q_B = pq::charge(1);
            s.m_A = pq::mass(1);
            s.m_B = pq::mass(1e6);   // true floor 1e-6 dwarfs the displacement
        } else {
            s.m_A = pq::mass(25);    // quadrupole 0.0625 = (T_A/2)^2
        }
        description =
            "without the localization floor, an arbitrarily small probe "
            "displacement carries full path information while the source "
            "closes adiabatically at spacelike separation";
    } else {
        assume.quantized_radiation = false;
        // Strong-source regime: the probe genuinely resolves the source, and
        // with radiation forced classical the recombination looks clean.
        s.T_A = pq::duration(0.9);
        s.T_B = pq::duration(0.8);
        if (field == FieldKind::Electromagnetic) {
            s.q_A = pq::charge(40);  // source moment 2 = 2 D
            s.q_B = pq::charge(1);
            s.m_A = pq::mass(1);
        } else {
            s.m_A = pq::mass(800);   // quadrupole 2 = 2 D
        }
        description =
            "without quantized radiation, the recombination sheds no "
            "entangling quanta even though the probe resolves the source "
            "difference within its light cone";
    }

    ParadoxWitness witness;
    witness.scenario = s;
    witness.dropped = drop;
    witness.which_path_ratio =
        estimators::which_path_criterion(s, Slack::exact(), assume).ratio;
    witness.recoherence_ratio =
        estimators::recoherence_criterion(s, Slack::exact(), assume).ratio;
    auto flags = estimators::spacelike(s);
    witness.alice_spacelike = flags.alice;
    witness.bob_spacelike = flags.bob;
    witness.description = description;
    return witness;
}

std::vector<CurvePoint> signaling_sweep(const std::vector<double>& margins,
                                        const sweep::GridSpec& grid) {
    grid.check();
    if (margins.empty())
        throw sweep::GridError("signaling sweep needs at least one margin");
    for (double k : margins)
        if (!(k >= 1.0))
            throw sweep::GridError("signaling margins must be >= 1");

    struct Sample {
        double metric, D, T_max;
        std::size_t index;
    };
    std::size_t n = grid.size();
    std::vector<Sample> samples;
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Scenario s = grid.scenario_at(i);
        ValidationReport v = validate(s);
        if (!v.ok())
            throw classifier::ValidationError("invalid scenario in signaling grid: " +
                                              v.joined(), v);
        auto rec = estimators::recoherence_criterion(s, Slack::exact());
        if (rec.verdict() != Verdict::Satisfied) continue;
        double metric = quantum_model::signaling_metric(s).metric;
        samples.push_back({metric, s.D.value(),
                           std::max(s.T_A.value(), s.T_B.value()), i});
    }

    std::vector<CurvePoint> curve;
    curve.reserve(margins.size());
    for (double k : margins) {
        CurvePoint point;
        point.margin = k;
        bool any = false;
        for (const auto& sample : samples) {
            if (sample.D < k * sample.T_max) continue;
            if (!any || sample.metric > point.max_metric) {
                point.max_metric = sample.metric;
                point.argmax = grid.scenario_at(sample.index);
                any = true;
            }
            ++point.points;
        }
        if (!any)
            throw sweep::GridError(
                "signaling restriction leaves no grid points at margin " +
                format_number(k));
        curve.push_back(point);
    }
    return curve;
}

std::string to_json(const TheoremReport& report, int indent) {
    nlohmann::json j{
        {"field", gedanken::to_string(report.field)},
        {"multipole_order", report.multipole_order},
        {"trials", report.trials},
        {"seed", report.seed},
        {"violations", report.violations},
        {"sup_ratio", finite_or_string(report.sup_ratio)},
        {"analytic_bound_sup", finite_or_string(report.sup_bound)},
        {"passed", report.passed()},
    };
    if (report.counterexample)
        j["counterexample"] = scenario_to_json(*report.counterexample);
    return j.dump(indent);
}

std::string to_json(const ParadoxWitness& witness, int indent) {
    nlohmann::json j{
        {"dropped", to_string(witness.dropped)},
        {"scenario", scenario_to_json(witness.scenario)},
        {"which_path_ratio", finite_or_string(witness.which_path_ratio)},
        {"recoherence_ratio", finite_or_string(witness.recoherence_ratio)},
        {"alice_spacelike", witness.alice_spacelike},
        {"bob_spacelike", witness.bob_spacelike},
        {"demonstrates_paradox", witness.demonstrates_paradox()},
        {"description", witness.description},
    };
    return j.dump(indent);
}

std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
    std::string out =
        "# planck units (hbar = c = G = 1)\n"
        "margin,max_metric,points,d,D,T_A,T_B,q_A,q_B,m_A,m_B\n";
    for (const auto& p : curve) {
        const Scenario& s = p.argmax;
        out += format_number(p.margin);
        out += ',';
        out += format_number(p.max_metric);
        out += ',';
        out += std::to_string(p.points);
        for (double v : {s.d.value(), s.D.value(), s.T_A.value(), s.T_B.value(),
                         s.q_A.value(), s.q_B.value(), s.m_A.value(),
                         s.m_B.value()}) {
            out += ',';
            out += format_number(v);
        }
        out += '\n';
    }
    return out;
}

std::string curve_to_json(const std::vector<CurvePoint>& curve, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : curve) {
        arr.push_back(nlohmann::json{
            {"margin", p.margin},
            {"max_metric", p.max_metric},
            {"points", p.points},
            {"argmax", scenario_to_json(p.argmax)},
        });
    }
    return arr.dump(indent);
}

}  // namespace gedanken::consistency
