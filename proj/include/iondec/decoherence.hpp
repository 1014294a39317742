#pragma once

// Scattering-induced decoherence of ions in a concentrated ionic solution.
//
// All rates use the thermal single-point evaluation <sigma v> ~ sigma(v) v at
// v = sqrt(kT/m), so that m v^2 = kT and the Coulomb cross section becomes
// mass independent. Formulas carry no extra numerical prefactors.

#include "iondec/matter_db.hpp"
#include "iondec/units.hpp"

namespace iondec {

inline constexpr double kDefaultTemperatureK = 310.0;
inline constexpr double kDefaultIonCount = 1e23;

struct DecoherenceContext {
    Quantity ion_mass;
    Quantity temperature;
    Quantity n;  // scatterer number density
    double N_ions;
    Quantity lattice_edge_a;

    // Throws DomainError unless every field is strictly positive and N_ions >= 1.
    void validate() const;
};

// Context for one salt: the cation is the decohering ion, n is the
// formula-unit number density of the crystallising salt.
DecoherenceContext make_context(const SaltRecord& salt,
                                Quantity temperature = Quantity(kDefaultTemperatureK, Dim::Temperature),
                                double ion_count = kDefaultIonCount);

Quantity de_broglie_wavelength(const DecoherenceContext& ctx);  // 2 pi hbar / sqrt(3 m k T)
Quantity thermal_speed(const DecoherenceContext& ctx);          // sqrt(k T / m)
Quantity coulomb_cross_section(const DecoherenceContext& ctx);  // (g q_e^2 / (m v^2))^2
Quantity scattering_rate(const DecoherenceContext& ctx);        // n sigma v

// Suppression of the off-diagonal element rho(x, x') with |x - x'| = dx:
//   exp(-Lambda t (1 - exp(-dx^2 / (2 lambda^2))))
// Throws DomainError for t < 0 or lambda <= 0.
double decoherence_factor(const Quantity& dx, const Quantity& t, const Quantity& lambda,
                          const Quantity& rate);

// Ion-ion collision time for N ions, sqrt(m (kT)^3) / (N n g^2 q_e^4).
Quantity tau1(const DecoherenceContext& ctx);

// Distant-ion interaction time, sqrt(m kT) / (N n a g q_e^2).
Quantity tau2(const DecoherenceContext& ctx);

// Comparison mode: <sigma v> integrated over the Maxwell-Boltzmann speed
// distribution with sigma(v) = (g q_e^2 / (m v^2))^2. The Coulomb cross section
// makes the integral diverge at v -> 0, so speeds below
// cutoff_fraction * thermal_speed are excluded. Not used by tau1/tau2.
Quantity scattering_rate_maxwell_boltzmann(const DecoherenceContext& ctx, double cutoff_fraction = 0.1);

}  // namespace iondec
