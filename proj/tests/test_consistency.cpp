#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "gedanken/consistency.hpp"
#include "gedanken/estimators.hpp"
#include "gedanken/quantum_model.hpp"
#include "support.hpp"

using namespace gedanken;
using namespace gedanken::consistency;

namespace {

sweep::GridSpec small_signaling_grid() {
    sweep::GridSpec grid;
    grid.base.field = FieldKind::Electromagnetic;
    grid.base.q_A = pq::charge(1);
    grid.base.q_B = pq::charge(1);
    grid.base.d = pq::length(0.05);
    grid.base.D = pq::length(2);
    grid.base.T_A = pq::duration(1);
    grid.base.T_B = pq::duration(1);
    grid.slack = estimators::Slack::exact();
    grid.axes = {
        {"D", 2.0, 32.0, 9, /*log_spaced=*/true},
        {"D_A", 0.1, 0.9, 5, /*log_spaced=*/false},
    };
    return grid;
}

}  // namespace

TEST_CASE("no-paradox theorem holds over large random families") {
    for (FieldKind field : {FieldKind::Electromagnetic, FieldKind::Gravitational}) {
        auto report = no_paradox_theorem(field, 0, 10000, 0xabba0001ULL);
        CHECK(report.passed());
        CHECK(report.violations == 0);
        CHECK(report.trials == 10000);
        CHECK(report.sup_ratio < report.sup_bound);
        CHECK(report.sup_bound < 1.0);
        CHECK(report.sup_ratio > 0.0);
        CHECK(!report.counterexample.has_value());
        CHECK(report.field == field);
    }
}

TEST_CASE("no-paradox theorem holds at every multipole order") {
    for (int n = 1; n <= 6; ++n) {
        auto em = no_paradox_theorem(FieldKind::Electromagnetic, n, 2000,
                                     0xabba0002ULL + static_cast<unsigned>(n));
        CHECK(em.passed());
        CHECK(em.multipole_order == n);
    }
    for (int n = 2; n <= 6; ++n) {
        auto gr = no_paradox_theorem(FieldKind::Gravitational, n, 2000,
                                     0xabba0003ULL + static_cast<unsigned>(n));
        CHECK(gr.passed());
    }
}

TEST_CASE("theorem sampling is deterministic in the seed") {
    auto a = no_paradox_theorem(FieldKind::Electromagnetic, 1, 3000, 42);
    auto b = no_paradox_theorem(FieldKind::Electromagnetic, 1, 3000, 42);
    CHECK(a.sup_ratio == b.sup_ratio);
    CHECK(a.sup_bound == b.sup_bound);
    auto c = no_paradox_theorem(FieldKind::Electromagnetic, 1, 3000, 43);
    CHECK(c.sup_ratio != a.sup_ratio);  // different family, same conclusion
    CHECK(c.passed());
}

TEST_CASE("theorem argument checking") {
    CHECK_THROWS_AS(no_paradox_theorem(FieldKind::Electromagnetic, 1, 0, 1),
                    DomainError);
    CHECK_THROWS_AS(no_paradox_theorem(FieldKind::Electromagnetic, 1, -5, 1),
                    DomainError);
    // The gravitational dipole vanishes; there is no order-1 theorem to run.
    CHECK_THROWS_AS(no_paradox_theorem(FieldKind::Gravitational, 1, 100, 1),
                    DomainError);
}

TEST_CASE("counterfactual probes reopen the paradox, one ingredient at a time") {
    for (FieldKind field : {FieldKind::Electromagnetic, FieldKind::Gravitational}) {
        for (Ingredient drop :
             {Ingredient::VacuumFluctuations, Ingredient::QuantizedRadiation}) {
            auto w = counterfactual_probe(field, drop);
            CHECK(w.demonstrates_paradox());
            CHECK(w.which_path_ratio > 1.0);
            CHECK(w.recoherence_ratio < 1.0);
            CHECK(w.alice_spacelike);
            CHECK(w.bob_spacelike);
            CHECK(w.dropped == drop);
            CHECK(!w.description.empty());
            CHECK(validate(w.scenario).ok());

            // With nothing dropped, the very same scenario obeys the bound:
            // either the probe cannot resolve the difference, or the
            // recombination radiates. The contradiction needs the drop.
            auto exact = estimators::Slack::exact();
            auto rec = estimators::recoherence_criterion(w.scenario, exact);
            auto wp = estimators::which_path_criterion(w.scenario, exact);
            bool full_theory_paradox =
                rec.verdict() == estimators::Verdict::Satisfied &&
                wp.verdict() == estimators::Verdict::Satisfied;
            CHECK(!full_theory_paradox);
        }
    }
}

TEST_CASE("vacuum-fluctuation drop removes the floor, not the displacement") {
    auto w = counterfactual_probe(FieldKind::Electromagnetic,
                                  Ingredient::VacuumFluctuations);
    CHECK(std::isinf(w.which_path_ratio));  // any displacement resolvable
    auto q = counterfactual_probe(FieldKind::Electromagnetic,
                                  Ingredient::QuantizedRadiation);
    CHECK(std::isfinite(q.which_path_ratio));
    CHECK(q.recoherence_ratio == 0.0);  // no quanta without quantization
}

TEST_CASE("signaling curve is non-increasing in the margin") {
    auto grid = small_signaling_grid();
    auto curve = signaling_sweep({1, 2, 4, 8, 16}, grid);
    REQUIRE(curve.size() == 5);
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        CHECK(curve[i].max_metric >= curve[i + 1].max_metric);
        CHECK(curve[i].points >= curve[i + 1].points);  // nested restrictions
    }
    for (const auto& pt : curve) {
        CHECK(pt.points > 0);
        CHECK(pt.max_metric > 0.0);
        CHECK(pt.max_metric < 1.0);
        // The reported maximizer reproduces the reported maximum.
        auto probe = quantum_model::signaling_metric(pt.argmax);
        CHECK(probe.metric == doctest::Approx(pt.max_metric).epsilon(1e-12));
        // Every surviving point satisfies the margin restriction.
        double t_max = std::max(pt.argmax.T_A.value(), pt.argmax.T_B.value());
        CHECK(pt.argmax.D.value() >= pt.margin * t_max);
    }
    // The far tail is causally quiet: three decades of margin wipe out the
    // metric by many orders of magnitude.
    CHECK(curve.back().max_metric < 1e-3 * curve.front().max_metric);
}

TEST_CASE("signaling curve argument checking") {
    auto grid = small_signaling_grid();
    CHECK_THROWS_AS(signaling_sweep({0.5}, grid), sweep::GridError);
    CHECK_THROWS_AS(signaling_sweep({}, grid), sweep::GridError);
    // A margin no grid point survives is an error, not a silent zero.
    CHECK_THROWS_AS(signaling_sweep({1e9}, grid), sweep::GridError);
}

TEST_CASE("theorem report serializes with its conclusion") {
    auto report = no_paradox_theorem(FieldKind::Gravitational, 0, 500, 99);
    auto j = nlohmann::json::parse(to_json(report));
    CHECK(j["field"] == "gravitational");
    CHECK(j["multipole_order"] == 2);
    CHECK(j["trials"] == 500);
    CHECK(j["violations"] == 0);
    CHECK(j["passed"] == true);
    CHECK(j["sup_ratio"].get<double>() < 1.0);
    CHECK(!j.contains("counterexample"));
}

TEST_CASE("witness serialization carries the scenario and the verdicts") {
    auto w = counterfactual_probe(FieldKind::Electromagnetic,
                                  Ingredient::QuantizedRadiation);
    auto j = nlohmann::json::parse(to_json(w));
    CHECK(j["dropped"] == "quantized_radiation");
    CHECK(j["demonstrates_paradox"] == true);
    CHECK(j["scenario"]["field"] == "electromagnetic");
    CHECK(j["which_path_ratio"].get<double>() > 1.0);
}

TEST_CASE("curve serialization round trips") {
    auto curve = signaling_sweep({1, 4}, small_signaling_grid());
    auto csv = curve_to_csv(curve);
    CHECK(csv.find("margin,max_metric,points") != std::string::npos);
    CHECK(csv.find("# planck units") != std::string::npos);
    // One comment, one header, one line per margin.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    auto j = nlohmann::json::parse(curve_to_json(curve));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["margin"] == 1.0);
    CHECK(j[0]["max_metric"].get<double>() >= j[1]["max_metric"].get<double>());
}

TEST_CASE("ingredient names") {
    CHECK(to_string(Ingredient::VacuumFluctuations) == "vacuum_fluctuations");
    CHECK(to_string(Ingredient::QuantizedRadiation) == "quantized_radiation");
}
