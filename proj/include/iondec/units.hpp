#pragma once

// Dimensioned scalars in SI base units.
//
// Dimensions are carried at runtime as an exponent vector over the base
// dimensions {mass, length, time, current, temperature}. Multiplication and
// division combine exponents; addition, subtraction and comparison require
// identical dimensions and throw DimensionError otherwise.

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

#include "iondec/error.hpp"

namespace iondec {

struct Dimension {
    enum Base : std::size_t { kMass, kLength, kTime, kCurrent, kTemperature, kCount };

    std::array<std::int8_t, kCount> exp{};

    constexpr Dimension() = default;
    constexpr Dimension(int mass, int length, int time, int current = 0, int temperature = 0)
        : exp{static_cast<std::int8_t>(mass), static_cast<std::int8_t>(length),
              static_cast<std::int8_t>(time), static_cast<std::int8_t>(current),
              static_cast<std::int8_t>(temperature)} {}

    constexpr bool operator==(const Dimension&) const = default;

    constexpr Dimension operator+(const Dimension& o) const {
        Dimension d;
        for (std::size_t i = 0; i < kCount; ++i) d.exp[i] = static_cast<std::int8_t>(exp[i] + o.exp[i]);
        return d;
    }
    constexpr Dimension operator-(const Dimension& o) const {
        Dimension d;
        for (std::size_t i = 0; i < kCount; ++i) d.exp[i] = static_cast<std::int8_t>(exp[i] - o.exp[i]);
        return d;
    }
    constexpr Dimension scaled(int k) const {
        Dimension d;
        for (std::size_t i = 0; i < kCount; ++i) d.exp[i] = static_cast<std::int8_t>(exp[i] * k);
        return d;
    }

    // Human-readable SI rendering, e.g. "kg m^-3".
    std::string str() const;
};

// Named dimensions used by the decoherence formulas.
enum class Dim {
    Dimensionless,
    Mass,
    Length,
    Time,
    Temperature,
    NumberDensity,
    MassDensity,
    Speed,
    Area,
    Rate,
    Energy,
};

constexpr Dimension dimension_of(Dim tag) {
    switch (tag) {
        case Dim::Dimensionless: return {0, 0, 0};
        case Dim::Mass: return {1, 0, 0};
        case Dim::Length: return {0, 1, 0};
        case Dim::Time: return {0, 0, 1};
        case Dim::Temperature: return {0, 0, 0, 0, 1};
        case Dim::NumberDensity: return {0, -3, 0};
        case Dim::MassDensity: return {1, -3, 0};
        case Dim::Speed: return {0, 1, -1};
        case Dim::Area: return {0, 2, 0};
        case Dim::Rate: return {0, 0, -1};
        case Dim::Energy: return {1, 2, -2};
    }
    return {};
}

const char* to_string(Dim tag);

class Quantity {
public:
    Quantity(double magnitude, Dimension dim) : value_(magnitude), dim_(dim) {
        if (!std::isfinite(magnitude)) throw DomainError("quantity magnitude must be finite");
    }
    Quantity(double magnitude, Dim tag) : Quantity(magnitude, dimension_of(tag)) {}

    // SI magnitude.
    double si() const noexcept { return value_; }
    const Dimension& dimension() const noexcept { return dim_; }
    bool is(Dim tag) const noexcept { return dim_ == dimension_of(tag); }

    // Magnitude, after checking the quantity has the expected dimension.
    double in(Dim tag) const;

    Quantity operator-() const { return {-value_, dim_}; }
    Quantity& operator+=(const Quantity& o);
    Quantity& operator-=(const Quantity& o);
    Quantity& operator*=(double s) { return *this = Quantity(value_ * s, dim_); }
    Quantity& operator/=(double s) { return *this = Quantity(value_ / s, dim_); }

    friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
    friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
    friend Quantity operator*(const Quantity& a, const Quantity& b) {
        return {a.value_ * b.value_, a.dim_ + b.dim_};
    }
    friend Quantity operator/(const Quantity& a, const Quantity& b) {
        return {a.value_ / b.value_, a.dim_ - b.dim_};
    }
    friend Quantity operator*(const Quantity& a, double s) { return {a.value_ * s, a.dim_}; }
    friend Quantity operator*(double s, const Quantity& a) { return {a.value_ * s, a.dim_}; }
    friend Quantity operator/(const Quantity& a, double s) { return {a.value_ / s, a.dim_}; }
    friend Quantity operator/(double s, const Quantity& a) {
        return {s / a.value_, Dimension{} - a.dim_};
    }

    friend bool operator==(const Quantity& a, const Quantity& b);
    friend std::partial_ordering operator<=>(const Quantity& a, const Quantity& b);

private:
    double value_;
    Dimension dim_;
};

Quantity quantity(double magnitude, Dim tag);

Quantity pow(const Quantity& q, int k);
// Square and cube roots require every exponent to be divisible by the root order.
Quantity sqrt(const Quantity& q);
Quantity cbrt(const Quantity& q);

// Exact SI values (2019 redefinition) and CODATA 2018 for the rest.
namespace constants {
inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kBoltzmann = 1.380649e-23;     // J / K
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F / m
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kCoulomb = 1.0 / (4.0 * kPi * kVacuumPermittivity);  // N m^2 / C^2
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kAngstrom = 1e-10;                    // m
inline constexpr double kZeroCelsius = 273.15;                // K

inline const Quantity hbar{kHbar, Dimension{1, 2, -1}};
inline const Quantity k_B{kBoltzmann, Dimension{1, 2, -2, 0, -1}};
inline const Quantity q_e{kElementaryCharge, Dimension{0, 0, 1, 1}};
inline const Quantity g{kCoulomb, Dimension{1, 3, -4, -2}};
inline const Quantity amu{kAtomicMassUnit, Dim::Mass};
}  // namespace constants

// Display-unit conversions.
Quantity from_amu(double amu);
double to_amu(const Quantity& mass);
Quantity from_angstrom(double angstrom);
double to_angstrom(const Quantity& length);
Quantity from_celsius(double celsius);
double to_celsius(const Quantity& temperature);

}  // namespace iondec
