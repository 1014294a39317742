#include "iondec/decoherence.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace iondec {

using namespace constants;

void DecoherenceContext::validate() const {
    if (!(ion_mass.in(Dim::Mass) > 0)) throw DomainError("ion mass must be positive");
    if (!(temperature.in(Dim::Temperature) > 0)) throw DomainError("temperature must be positive");
    if (!(n.in(Dim::NumberDensity) > 0)) throw DomainError("number density must be positive");
    if (!(lattice_edge_a.in(Dim::Length) > 0)) throw DomainError("lattice edge must be positive");
    if (!std::isfinite(N_ions) || N_ions < 1) throw DomainError("ion count must be >= 1");
}

DecoherenceContext make_context(const SaltRecord& salt, Quantity temperature, double ion_count) {
    DecoherenceContext ctx{salt.cation.mass, temperature, number_density(salt), ion_count,
                           salt.lattice_edge_a};
    ctx.validate();
    return ctx;
}

Quantity de_broglie_wavelength(const DecoherenceContext& ctx) {
    ctx.validate();
    return 2.0 * kPi * hbar / sqrt(3.0 * ctx.ion_mass * k_B * ctx.temperature);
}

Quantity thermal_speed(const DecoherenceContext& ctx) {
    ctx.validate();
    return sqrt(k_B * ctx.temperature / ctx.ion_mass);
}

Quantity coulomb_cross_section(const DecoherenceContext& ctx) {
    const Quantity v = thermal_speed(ctx);
    return pow(g * q_e * q_e / (ctx.ion_mass * v * v), 2);
}

Quantity scattering_rate(const DecoherenceContext& ctx) {
    return ctx.n * coulomb_cross_section(ctx) * thermal_speed(ctx);
}

double decoherence_factor(const Quantity& dx, const Quantity& t, const Quantity& lambda,
                          const Quantity& rate) {
    const double sep = dx.in(Dim::Length);
    const double time = t.in(Dim::Time);
    const double wavelength = lambda.in(Dim::Length);
    const double r = rate.in(Dim::Rate);
    if (time < 0) throw DomainError("decoherence_factor: negative time");
    if (!(wavelength > 0)) throw DomainError("decoherence_factor: wavelength must be positive");
    if (r < 0) throw DomainError("decoherence_factor: negative scattering rate");
    const double u = sep * sep / (2.0 * wavelength * wavelength);
    // 1 - exp(-u), accurate for u -> 0.
    const double localisation = -std::expm1(-u);
    return std::exp(-r * time * localisation);
}

Quantity tau1(const DecoherenceContext& ctx) {
    ctx.validate();
    const Quantity kT = k_B * ctx.temperature;
    return sqrt(ctx.ion_mass * pow(kT, 3)) / (ctx.N_ions * ctx.n * pow(g, 2) * pow(q_e, 4));
}

Quantity tau2(const DecoherenceContext& ctx) {
    ctx.validate();
    const Quantity kT = k_B * ctx.temperature;
    return sqrt(ctx.ion_mass * kT) / (ctx.N_ions * ctx.n * ctx.lattice_edge_a * g * pow(q_e, 2));
}

Quantity scattering_rate_maxwell_boltzmann(const DecoherenceContext& ctx, double cutoff_fraction) {
    if (!(cutoff_fraction > 0)) throw DomainError("Maxwell-Boltzmann cutoff must be positive");
    // In units of x = v / v_th the speed density is sqrt(2/pi) x^2 exp(-x^2/2) and
    // sigma(v) v = sigma(v_th) v_th / x^3.
    const auto integrand = [](double x) { return std::exp(-0.5 * x * x) / x; };
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, cutoff_fraction, std::numeric_limits<double>::infinity(), 15, 1e-12);
    const double average = std::sqrt(2.0 / kPi) * integral;
    return scattering_rate(ctx) * average;
}

}  // namespace iondec
