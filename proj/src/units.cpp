#include "gedanken/units.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace gedanken {

std::string Dimension::str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "M^%d L^%d Q^%d", mass, length, charge);
    return buf;
}

namespace si_constants {

double planck_length() { return std::sqrt(hbar * G / (c * c * c)); }
double planck_mass() { return std::sqrt(hbar * c / G); }
double planck_charge() { return std::sqrt(4.0 * M_PI * epsilon0 * hbar * c); }

}  // namespace si_constants

std::string to_string(UnitSystem s) {
    switch (s) {
        case UnitSystem::SI: return "SI";
        case UnitSystem::Natural: return "natural";
        case UnitSystem::Planck: return "planck";
    }
    return "?";
}

double Quantity::planck_number() const {
    if (system_ != UnitSystem::Planck)
        throw DimensionError("planck_number() requires Planck units, have " +
                             to_string(system_) + " for " + str());
    return value_;
}

double Quantity::dimensionless() const {
    bool ok = (system_ == UnitSystem::SI) ? dim_.is_dimensionless()
                                          : dim_.natural_length_power() == 0;
    if (!ok)
        throw DimensionError("not dimensionless: " + str());
    return value_;
}

void Quantity::require_additive_compatible(const Quantity& o, const char* op) const {
    if (system_ != o.system_)
        throw DimensionError(std::string(op) + " across unit systems: " + str() +
                             " vs " + o.str());
    bool ok = (system_ == UnitSystem::SI) ? dim_ == o.dim_
                                          : dim_.natural_equivalent(o.dim_);
    if (!ok)
        throw DimensionError(std::string(op) + " of incompatible dimensions: " +
                             str() + " vs " + o.str());
}

Quantity Quantity::operator+(const Quantity& o) const {
    require_additive_compatible(o, "sum");
    return Quantity(value_ + o.value_, dim_, system_);
}

Quantity Quantity::operator-(const Quantity& o) const {
    require_additive_compatible(o, "difference");
    return Quantity(value_ - o.value_, dim_, system_);
}

Quantity Quantity::operator*(const Quantity& o) const {
    if (system_ != o.system_)
        throw DimensionError("product across unit systems: " + str() + " vs " + o.str());
    return Quantity(value_ * o.value_, dim_.times(o.dim_), system_);
}

Quantity Quantity::operator/(const Quantity& o) const {
    if (system_ != o.system_)
        throw DimensionError("quotient across unit systems: " + str() + " vs " + o.str());
    return Quantity(value_ / o.value_, dim_.per(o.dim_), system_);
}

Quantity Quantity::pow(int n) const {
    if (n == 0) return Quantity(1.0, Dimension{}, system_);
    if (n < 0) return Quantity(1.0, Dimension{}, system_) / pow(-n);
    Quantity r = *this;
    for (int i = 1; i < n; ++i) r = r * *this;
    return r;
}

int Quantity::compare(const Quantity& o) const {
    require_additive_compatible(o, "comparison");
    if (value_ < o.value_) return -1;
    if (value_ > o.value_) return 1;
    return 0;
}

std::string Quantity::str() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g [%s, %s]", value_, dim_.str().c_str(),
                  to_string(system_).c_str());
    return buf;
}

Quantity to_natural(const Quantity& q) {
    switch (q.system()) {
        case UnitSystem::Natural:
            return q;
        case UnitSystem::Planck: {
            double lp = si_constants::planck_length();
            double v = q.value() * std::pow(lp, q.dim().natural_length_power());
            return Quantity::natural(v, q.dim());
        }
        case UnitSystem::SI: {
            // kg -> 1/m via m c / hbar; C -> Planck charges via 1/q_P.
            double v = q.value();
            v *= std::pow(si_constants::c / si_constants::hbar, q.dim().mass);
            v *= std::pow(si_constants::planck_charge(), -q.dim().charge);
            return Quantity::natural(v, q.dim());
        }
    }
    throw DimensionError("unknown unit system");
}

Quantity to_si(const Quantity& q) {
    if (q.system() == UnitSystem::SI) return q;
    Quantity n = to_natural(q);
    double v = n.value();
    v *= std::pow(si_constants::hbar / si_constants::c, n.dim().mass);
    v *= std::pow(si_constants::planck_charge(), n.dim().charge);
    return Quantity::si(v, n.dim());
}

Quantity planck_normalize(const Quantity& q) {
    if (q.system() == UnitSystem::Planck) return q;
    Quantity n = to_natural(q);
    double lp = si_constants::planck_length();
    double v = n.value() * std::pow(lp, -n.dim().natural_length_power());
    return Quantity::planck(v, n.dim());
}

Quantity to_planck(const Quantity& q) { return planck_normalize(q); }

namespace si_units {

Quantity meter(double v) { return Quantity::si(v, dim::length); }
Quantity second(double v) {
    // Collapse at construction: a duration t is carried as the length c t.
    return Quantity::si(v * si_constants::c, dim::time_like);
}
Quantity kilogram(double v) { return Quantity::si(v, dim::mass); }
Quantity coulomb(double v) { return Quantity::si(v, dim::charge); }

}  // namespace si_units

Quantity parse_planck_value(const std::string& text, Dimension expected_dim) {
    std::string num = text;
    std::string tag;
    if (auto at = text.find('@'); at != std::string::npos) {
        num = text.substr(0, at);
        tag = text.substr(at + 1);
    }
    const char* begin = num.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (end == begin || (end && *end != '\0'))
        throw DomainError("cannot parse number '" + text + "'");
    if (!std::isfinite(v))
        throw DomainError("non-finite value '" + text + "'");

    if (tag.empty()) return Quantity::planck(v, expected_dim);

    while (!tag.empty() && tag.front() == ' ') tag.erase(tag.begin());
    while (!tag.empty() && tag.back() == ' ') tag.pop_back();
    Quantity si;
    if (tag == "m") si = si_units::meter(v);
    else if (tag == "s") si = si_units::second(v);
    else if (tag == "kg") si = si_units::kilogram(v);
    else if (tag == "C") si = si_units::coulomb(v);
    else throw DimensionError("unknown unit tag '" + tag + "' in '" + text + "'");

    if (!(si.dim() == expected_dim))
        throw DimensionError("unit tag '" + tag + "' has dimension " +
                             si.dim().str() + ", expected " + expected_dim.str());
    return planck_normalize(si);
}

}  // namespace gedanken
