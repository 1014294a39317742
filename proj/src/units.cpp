#include "iondec/units.hpp"

#include <sstream>

namespace iondec {

std::string Dimension::str() const {
    static constexpr const char* kSymbols[kCount] = {"kg", "m", "s", "A", "K"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < kCount; ++i) {
        if (exp[i] == 0) continue;
        if (!first) os << ' ';
        os << kSymbols[i];
        if (exp[i] != 1) os << '^' << static_cast<int>(exp[i]);
        first = false;
    }
    return first ? "1" : os.str();
}

const char* to_string(Dim tag) {
    switch (tag) {
        case Dim::Dimensionless: return "Dimensionless";
        case Dim::Mass: return "Mass";
        case Dim::Length: return "Length";
        case Dim::Time: return "Time";
        case Dim::Temperature: return "Temperature";
        case Dim::NumberDensity: return "NumberDensity";
        case Dim::MassDensity: return "MassDensity";
        case Dim::Speed: return "Speed";
        case Dim::Area: return "Area";
        case Dim::Rate: return "Rate";
        case Dim::Energy: return "Energy";
    }
    return "?";
}

namespace {

void require_same(const Dimension& a, const Dimension& b, const char* op) {
    if (!(a == b)) {
        throw DimensionError(std::string(op) + ": dimension mismatch [" + a.str() + "] vs [" +
                             b.str() + "]");
    }
}

Quantity root(const Quantity& q, int order, double magnitude) {
    Dimension d;
    for (std::size_t i = 0; i < Dimension::kCount; ++i) {
        const int e = q.dimension().exp[i];
        if (e % order != 0) {
            throw DimensionError("root of order " + std::to_string(order) + " of [" +
                                 q.dimension().str() + "] has fractional exponents");
        }
        d.exp[i] = static_cast<std::int8_t>(e / order);
    }
    return {magnitude, d};
}

}  // namespace

double Quantity::in(Dim tag) const {
    if (!is(tag)) {
        throw DimensionError(std::string("expected ") + to_string(tag) + " [" +
                             dimension_of(tag).str() + "], got [" + dim_.str() + "]");
    }
    return value_;
}

Quantity& Quantity::operator+=(const Quantity& o) {
    require_same(dim_, o.dim_, "add");
    return *this = Quantity(value_ + o.value_, dim_);
}

Quantity& Quantity::operator-=(const Quantity& o) {
    require_same(dim_, o.dim_, "subtract");
    return *this = Quantity(value_ - o.value_, dim_);
}

bool operator==(const Quantity& a, const Quantity& b) {
    require_same(a.dim_, b.dim_, "compare");
    return a.value_ == b.value_;
}

std::partial_ordering operator<=>(const Quantity& a, const Quantity& b) {
    require_same(a.dim_, b.dim_, "compare");
    return a.value_ <=> b.value_;
}

Quantity quantity(double magnitude, Dim tag) { return {magnitude, tag}; }

Quantity pow(const Quantity& q, int k) {
    return {std::pow(q.si(), k), q.dimension().scaled(k)};
}

Quantity sqrt(const Quantity& q) {
    if (q.si() < 0) throw DomainError("square root of a negative quantity");
    return root(q, 2, std::sqrt(q.si()));
}

Quantity cbrt(const Quantity& q) { return root(q, 3, std::cbrt(q.si())); }

Quantity from_amu(double amu) { return {amu * constants::kAtomicMassUnit, Dim::Mass}; }
double to_amu(const Quantity& mass) { return mass.in(Dim::Mass) / constants::kAtomicMassUnit; }

Quantity from_angstrom(double angstrom) { return {angstrom * constants::kAngstrom, Dim::Length}; }
double to_angstrom(const Quantity& length) { return length.in(Dim::Length) / constants::kAngstrom; }

Quantity from_celsius(double celsius) {
    return {celsius + constants::kZeroCelsius, Dim::Temperature};
}
double to_celsius(const Quantity& temperature) {
    return temperature.in(Dim::Temperature) - constants::kZeroCelsius;
}

}  // namespace iondec
