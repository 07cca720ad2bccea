#ifndef GEDANKEN_UNITS_HPP
#define GEDANKEN_UNITS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace gedanken {

/// Thrown when an operation mixes incompatible dimensions or unit systems.
class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on out-of-domain numeric input (negative length, zero mass, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integer exponents of a physical dimension on the (mass, length, charge)
/// axes. Time is collapsed into length at construction (c = 1): a duration
/// enters as the length c*t, so `length` counts length and time together.
/// Exponent arithmetic under multiplication is component-wise and exact.
struct Dimension {
    int mass = 0;
    int length = 0;   // includes time (collapse convention: time == length)
    int charge = 0;

    static constexpr const char* kCollapseConvention = "time==length (c=1)";

    /// Build from separate SI-style exponents; time folds into length.
    static constexpr Dimension of(int mass_exp, int length_exp, int time_exp,
                                  int charge_exp) {
        return Dimension{mass_exp, length_exp + time_exp, charge_exp};
    }

    /// The one free exponent left once hbar = c = 1 identifies mass with
    /// inverse length and q_P = sqrt(hbar c) = 1 makes charge a pure number.
    constexpr int natural_length_power() const { return length - mass; }

    /// Equivalence under hbar = c = 1 (charge folded via q_P = 1).
    constexpr bool natural_equivalent(const Dimension& o) const {
        return natural_length_power() == o.natural_length_power();
    }

    constexpr bool is_dimensionless() const {
        return mass == 0 && length == 0 && charge == 0;
    }

    constexpr Dimension times(const Dimension& o) const {
        return Dimension{mass + o.mass, length + o.length, charge + o.charge};
    }
    constexpr Dimension per(const Dimension& o) const {
        return Dimension{mass - o.mass, length - o.length, charge - o.charge};
    }
    constexpr Dimension pow(int n) const {
        return Dimension{mass * n, length * n, charge * n};
    }

    friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

    std::string str() const;  // e.g. "M^1 L^-2 Q^0"
};

namespace dim {
inline constexpr Dimension none{};
inline constexpr Dimension mass{1, 0, 0};
inline constexpr Dimension length{0, 1, 0};
inline constexpr Dimension time_like = length;  // c = 1
inline constexpr Dimension charge{0, 0, 1};
inline constexpr Dimension energy = mass;       // hbar = c = 1
/// Electric field in the hbar = c = 1 reduction: a vacuum fluctuation over a
/// region of size R carries field magnitude ~ 1/R^2.
inline constexpr Dimension electric_field{0, -2, 0};
/// Curvature (two derivatives of the metric): 1/length^2.
inline constexpr Dimension curvature{0, -2, 0};
}  // namespace dim

/// SI constants used by the conversions (CODATA 2018).
namespace si_constants {
inline constexpr double c = 299792458.0;           // m / s
inline constexpr double hbar = 1.054571817e-34;    // J s
inline constexpr double G = 6.67430e-11;           // m^3 / (kg s^2)
inline constexpr double epsilon0 = 8.8541878128e-12;  // F / m
double planck_length();  // sqrt(hbar G / c^3)   [m]
double planck_mass();    // sqrt(hbar c / G)     [kg]
double planck_charge();  // sqrt(4 pi eps0 hbar c) [C]
}  // namespace si_constants

/// Which unit system a Quantity's value is expressed in:
///   SI       kg^m . m^l . C^q, time already folded into meters via c
///   Natural  hbar = c = 1: meters^(l-m), charge counted in Planck charges
///   Planck   additionally G = 1: every value is a pure number
enum class UnitSystem { SI, Natural, Planck };

std::string to_string(UnitSystem);

/// A real value with an exact dimension and a unit-system tag. Addition,
/// subtraction and comparison require compatible dimensions in the same
/// system; multiplication and division combine dimensions freely.
class Quantity {
public:
    constexpr Quantity() = default;

    static constexpr Quantity si(double value, Dimension d) {
        return Quantity(value, d, UnitSystem::SI);
    }
    static constexpr Quantity natural(double value, Dimension d) {
        return Quantity(value, d, UnitSystem::Natural);
    }
    static constexpr Quantity planck(double value, Dimension d) {
        return Quantity(value, d, UnitSystem::Planck);
    }

    constexpr double value() const { return value_; }
    constexpr const Dimension& dim() const { return dim_; }
    constexpr UnitSystem system() const { return system_; }

    /// Value as a pure number in Planck units (hbar = c = G = 1 collapses
    /// every axis). Requires the Planck system.
    double planck_number() const;

    /// Value of a dimensionless quantity (natural_length_power == 0 in
    /// Natural/Planck systems; exact zero exponents in SI).
    double dimensionless() const;

    Quantity operator+(const Quantity& o) const;
    Quantity operator-(const Quantity& o) const;
    Quantity operator*(const Quantity& o) const;
    Quantity operator/(const Quantity& o) const;
    Quantity operator*(double s) const { return Quantity(value_ * s, dim_, system_); }
    Quantity operator/(double s) const { return Quantity(value_ / s, dim_, system_); }
    friend Quantity operator*(double s, const Quantity& q) { return q * s; }
    Quantity operator-() const { return Quantity(-value_, dim_, system_); }

    /// Integer power; value by repeated multiplication (reproducible).
    Quantity pow(int n) const;

    bool operator<(const Quantity& o) const { return compare(o) < 0; }
    bool operator>(const Quantity& o) const { return compare(o) > 0; }
    bool operator<=(const Quantity& o) const { return compare(o) <= 0; }
    bool operator>=(const Quantity& o) const { return compare(o) >= 0; }

    friend Quantity abs(const Quantity& q) {
        return Quantity(std::fabs(q.value_), q.dim_, q.system_);
    }

    std::string str() const;

private:
    constexpr Quantity(double v, Dimension d, UnitSystem s)
        : value_(v), dim_(d), system_(s) {}

    int compare(const Quantity& o) const;
    void require_additive_compatible(const Quantity& o, const char* op) const;

    double value_ = 0.0;
    Dimension dim_{};
    UnitSystem system_ = UnitSystem::Planck;
};

/// SI -> natural units (hbar = c = 1): kilograms fold into inverse meters,
/// coulombs into Planck charges. Dimension exponents are kept as bookkeeping.
Quantity to_natural(const Quantity& q);

/// Natural or Planck -> SI. Exact inverse of to_natural / planck_normalize.
Quantity to_si(const Quantity& q);

/// Natural -> Planck units (G = 1): every value becomes its magnitude in
/// powers of the Planck length; l_P maps to 1, the Planck mass maps to 1.
Quantity planck_normalize(const Quantity& q);

/// Convenience: route any system to Planck units.
Quantity to_planck(const Quantity& q);

/// Constructors for SI values. Seconds enter as the length c*t (the collapse
/// convention), so round trips stay on the collapsed axes.
namespace si_units {
Quantity meter(double v);
Quantity second(double v);
Quantity kilogram(double v);
Quantity coulomb(double v);
}  // namespace si_units

/// Planck-unit constructors for the scenario layer.
namespace pq {
inline constexpr Quantity number(double v) { return Quantity::planck(v, dim::none); }
inline constexpr Quantity charge(double v) { return Quantity::planck(v, dim::charge); }
inline constexpr Quantity mass(double v) { return Quantity::planck(v, dim::mass); }
inline constexpr Quantity length(double v) { return Quantity::planck(v, dim::length); }
inline constexpr Quantity duration(double v) { return Quantity::planck(v, dim::time_like); }
}  // namespace pq

/// Parse "3.2" (Planck units, expected_dim assumed) or "3.2@kg" / "1e-6@m" /
/// "2e-15@s" / "0.5@C" (SI tag, converted through natural to Planck units).
/// Throws DimensionError if the tagged unit does not match expected_dim.
Quantity parse_planck_value(const std::string& text, Dimension expected_dim);

}  // namespace gedanken

#endif  // GEDANKEN_UNITS_HPP
