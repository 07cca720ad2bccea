#include <doctest.h>

#include <string>

#include "gedanken/scenario.hpp"
#include "support.hpp"

using namespace gedanken;

namespace {

Scenario valid_em() {
    Scenario s;
    s.field = FieldKind::Electromagnetic;
    s.q_A = pq::charge(1);
    s.q_B = pq::charge(1);
    s.d = pq::length(2);
    s.D = pq::length(100);
    s.T_A = pq::duration(10);
    s.T_B = pq::duration(10);
    return s;
}

Scenario valid_gr() {
    Scenario s;
    s.field = FieldKind::Gravitational;
    s.q_A = pq::charge(0);
    s.q_B = pq::charge(0);
    s.m_A = pq::mass(1);
    s.m_B = pq::mass(1);
    s.d = pq::length(2);
    s.D = pq::length(100);
    s.T_A = pq::duration(10);
    s.T_B = pq::duration(10);
    return s;
}

bool mentions(const ValidationReport& r, const std::string& needle) {
    for (const auto& v : r.violations)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("baseline scenarios validate cleanly") {
    CHECK(validate(valid_em()).ok());
    CHECK(validate(valid_gr()).ok());
    CHECK(validate(valid_em()).joined().empty());
}

TEST_CASE("positivity and finiteness of the geometry") {
    for (auto mutate : {+[](Scenario& s) { s.d = pq::length(0); },
                        +[](Scenario& s) { s.d = pq::length(-1); },
                        +[](Scenario& s) { s.D = pq::length(0); },
                        +[](Scenario& s) { s.T_A = pq::duration(-2); },
                        +[](Scenario& s) { s.T_B = pq::duration(0); },
                        +[](Scenario& s) { s.m_A = pq::mass(0); },
                        +[](Scenario& s) { s.m_B = pq::mass(-1); },
                        +[](Scenario& s) { s.D = pq::length(1.0 / 0.0); },
                        +[](Scenario& s) { s.T_A = pq::duration(0.0 / 0.0); }}) {
        Scenario s = valid_em();
        mutate(s);
        CHECK(!validate(s).ok());
    }
}

TEST_CASE("charges must be nonnegative and finite") {
    Scenario s = valid_em();
    s.q_A = pq::charge(-1);
    CHECK(!validate(s).ok());
    s = valid_em();
    s.q_B = pq::charge(1.0 / 0.0);
    CHECK(!validate(s).ok());
    s = valid_em();
    s.q_A = pq::charge(0);  // a neutral source is fine (no moments, no paradox)
    CHECK(validate(s).ok());
}

TEST_CASE("separation hierarchy d << D is enforced via the cutoff") {
    Scenario s = valid_em();
    s.d = pq::length(11);
    s.D = pq::length(100);
    auto r = validate(s);
    CHECK(!r.ok());
    CHECK(mentions(r, "requires D >> d"));

    s.d = pq::length(10);  // exactly at the default 0.1 cutoff: allowed
    CHECK(validate(s).ok());

    s.d_over_D_max = 0.05;
    CHECK(!validate(s).ok());  // tighter cutoff now rejects it

    s.d_over_D_max = 1.5;  // the cutoff itself must sit in (0, 1)
    CHECK(!validate(s).ok());
    s.d_over_D_max = 0.0;
    CHECK(!validate(s).ok());
}

TEST_CASE("gravitational scenarios must be neutral and start at the quadrupole") {
    Scenario s = valid_gr();
    s.q_A = pq::charge(1);
    auto r = validate(s);
    CHECK(!r.ok());
    CHECK(mentions(r, "q_A = q_B = 0"));

    s = valid_gr();
    s.multipole_order = 1;  // dipole radiation is cancelled by recoil
    CHECK(!validate(s).ok());
    s.multipole_order = 2;
    CHECK(validate(s).ok());
    s.multipole_order = 3;
    CHECK(validate(s).ok());

    s = valid_gr();
    s.mirror = MirrorConfig{};
    r = validate(s);
    CHECK(!r.ok());
    CHECK(mentions(r, "electromagnetic"));
}

TEST_CASE("mirror configuration invariants") {
    Scenario s = valid_em();
    s.mirror = MirrorConfig{MirrorTiming::AlwaysPresent, pq::length(50), {}};
    CHECK(validate(s).ok());

    s.mirror->radius = pq::length(0);
    CHECK(!validate(s).ok());

    s.mirror = MirrorConfig{MirrorTiming::ErectedDuring, pq::length(50), {}};
    CHECK(!validate(s).ok());  // erection time required
    s.mirror->erection_time = pq::duration(5);
    CHECK(validate(s).ok());
    s.mirror->erection_time = pq::duration(-1);
    CHECK(!validate(s).ok());
}

TEST_CASE("validation reports accumulate every violation") {
    Scenario s = valid_gr();
    s.q_A = pq::charge(1);
    s.d = pq::length(-1);
    s.multipole_order = 1;
    auto r = validate(s);
    CHECK(r.violations.size() >= 3);
    CHECK(r.joined(" | ").find(" | ") != std::string::npos);
}

TEST_CASE("effective multipole order defaults per field") {
    Scenario s = valid_em();
    CHECK(s.effective_multipole_order() == 1);
    s.multipole_order = 3;
    CHECK(s.effective_multipole_order() == 3);
    Scenario g = valid_gr();
    CHECK(g.effective_multipole_order() == 2);
}

TEST_CASE("electromagnetic moments are q_A d^n") {
    MomentLadder ladder(FieldKind::Electromagnetic, pq::charge(3), pq::length(2));
    CHECK(ladder.dipole().value() == doctest::Approx(6.0));
    CHECK(ladder.quadrupole().value() == doctest::Approx(12.0));
    CHECK(ladder.moment(3).value() == doctest::Approx(24.0));
    CHECK(ladder.dipole().dim() == dim::charge.times(dim::length));
    CHECK(ladder.moment(3).dim() == dim::charge.times(dim::length.pow(3)));
    CHECK_THROWS_AS(ladder.moment(0), DomainError);
    CHECK_THROWS_AS(ladder.moment(-1), DomainError);
}

TEST_CASE("gravitational dipole vanishes identically") {
    MomentLadder ladder(FieldKind::Gravitational, pq::mass(7), pq::length(3));
    auto dip = ladder.dipole();
    CHECK(dip.value() == 0.0);  // exact zero, not merely small
    CHECK(dip.dim() == dim::mass.times(dim::length));
    CHECK(ladder.quadrupole().value() == doctest::Approx(63.0));
    CHECK(ladder.quadrupole().dim() == dim::mass.times(dim::length.pow(2)));
}

TEST_CASE("quadrupole difference oracle: recoiling laboratory limit") {
    // Exact two-branch moment difference for a particle + recoiling
    // laboratory, evaluated with a finite laboratory mass, converges to the
    // library's m_A d^2 as the laboratory mass grows.
    double m = 5.0, d = 0.3;
    MomentLadder ladder(FieldKind::Gravitational, pq::mass(m), pq::length(d));
    double lib = ladder.quadrupole().value();
    double heavy = oracle::two_point_quadrupole_difference(m, d, 1e12 * m);
    CHECK(lib == doctest::Approx(heavy).epsilon(1e-10));
    // With a light laboratory the recoil correction is visible -- the library
    // value is the strict upper limit.
    double light = oracle::two_point_quadrupole_difference(m, d, 10 * m);
    CHECK(light < lib);
    CHECK(lib == doctest::Approx(m * d * d));
}

TEST_CASE("moment ladder scales homogeneously in the separation") {
    oracle::SplitMix64 rng(0xabcdULL);
    for (int i = 0; i < 100; ++i) {
        double q = rng.log_uniform(1e-3, 1e3);
        double d = rng.log_uniform(1e-3, 1e3);
        double lambda = rng.log_uniform(0.1, 10.0);
        for (int n = 1; n <= 4; ++n) {
            MomentLadder base(FieldKind::Electromagnetic, pq::charge(q),
                              pq::length(d));
            MomentLadder scaled(FieldKind::Electromagnetic, pq::charge(q),
                                pq::length(lambda * d));
            double expect = base.moment(n).value();
            for (int k = 0; k < n; ++k) expect *= lambda;
            REQUIRE(scaled.moment(n).value() == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("moments() reads the right source for each field") {
    Scenario em = valid_em();
    em.q_A = pq::charge(4);
    em.d = pq::length(2);
    CHECK(moments(em).dipole().value() == doctest::Approx(8.0));

    Scenario gr = valid_gr();
    gr.m_A = pq::mass(4);
    gr.d = pq::length(2);
    CHECK(moments(gr).quadrupole().value() == doctest::Approx(16.0));
    CHECK(moments(gr).dipole().value() == 0.0);
}

TEST_CASE("field kind names") {
    CHECK(to_string(FieldKind::Electromagnetic) == "electromagnetic");
    CHECK(to_string(FieldKind::Gravitational) == "gravitational");
}
