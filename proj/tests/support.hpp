#ifndef GEDANKEN_TESTS_SUPPORT_HPP
#define GEDANKEN_TESTS_SUPPORT_HPP

// Test-side oracles and samplers. Everything here is implemented
// independently of the library so the two sides can disagree.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

// |<0|alpha>| for a coherent state with |alpha|^2 = n_mean, built explicitly
// in a truncated number basis: amplitudes a_k = alpha^k / sqrt(k!), overlap
// with the vacuum = a_0 / ||a||. Independent of any closed-form identity.
inline double fock_vacuum_overlap(double n_mean, int dim = 64) {
    // norm^2 = sum_{k<dim} n_mean^k / k!, accumulated term-by-term.
    long double norm_sq = 0.0L;
    long double term = 1.0L;  // k = 0
    for (int k = 0; k < dim; ++k) {
        norm_sq += term;
        term *= static_cast<long double>(n_mean) / (k + 1);
    }
    return static_cast<double>(1.0L / std::sqrt(norm_sq));
}

// overlap of two equal-width Gaussian wavepackets psi_{L,R}(x) =
// (2 pi sigma^2)^{-1/4} exp(-(x -+ delta/2)^2 / (4 sigma^2)), by composite
// Simpson quadrature on a window wide enough that the tail is < 1e-13.
inline double gaussian_overlap_quadrature(double delta, double sigma) {
    auto integrand = [&](double x) {
        double norm = std::pow(2.0 * M_PI * sigma * sigma, -0.25);
        double l = norm * std::exp(-(x + delta / 2) * (x + delta / 2) /
                                   (4 * sigma * sigma));
        double r = norm * std::exp(-(x - delta / 2) * (x - delta / 2) /
                                   (4 * sigma * sigma));
        return l * r;
    };
    double half_width = delta / 2 + 16 * sigma;
    int n = 20000;  // even panel count; step << sigma for any sane delta/sigma
    double h = 2 * half_width / n;
    long double sum = integrand(-half_width) + integrand(half_width);
    for (int i = 1; i < n; ++i)
        sum += integrand(-half_width + i * h) * (i % 2 ? 4.0 : 2.0);
    return static_cast<double>(sum * h / 3.0L);
}

// Difference of the second mass moment (about the center of mass) between
// the two branches of a particle + laboratory system: the particle sits at 0
// in one branch and at +d in the other, the laboratory recoils to hold the
// center of mass fixed. Exact two-point-mass evaluation; tends to m*d^2 as
// the laboratory mass goes to infinity.
inline double two_point_quadrupole_difference(double particle_mass, double d,
                                              double lab_mass) {
    // Branch "left": particle at 0, lab at 0 (common origin) -> moment 0.
    // Branch "right": particle shifts +d, lab shifts -d*m/M; positions
    // relative to the (unmoved) center of mass:
    double xp = d * lab_mass / (lab_mass + particle_mass);
    double xl = -d * particle_mass / (lab_mass + particle_mass);
    double moment_right = particle_mass * xp * xp + lab_mass * xl * xl;
    return moment_right;  // minus the left branch's 0
}

// CODATA 2018 reference magnitudes, frozen here as independent numbers (not
// recomputed from the library's constants).
inline constexpr double kPlanckLengthMeters = 1.616255e-35;
inline constexpr double kPlanckMassKg = 2.176434e-8;

// Deterministic splittable PRNG (splitmix64) for samplers.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return (next() >> 11) * 0x1.0p-53; }  // [0, 1)
    double log_uniform(double lo, double hi) {
        return lo * std::exp(uniform01() * std::log(hi / lo));
    }
};

}  // namespace oracle

#endif  // GEDANKEN_TESTS_SUPPORT_HPP
