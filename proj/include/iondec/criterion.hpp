#pragma once

// Decoherence criterion: compares the computed decoherence time with the
// observed dynamical time of the system and, together with whether an ordered
// quantum phase is actually observed, classifies which description applies.
//
// Rule, with tau_dec = min(tau1, tau2) and r = tau_dyn / tau_dec:
//   r <= threshold                         -> QuantumMechanicsAdequate
//   r >  threshold, no coherent phase seen -> ClassicalLimit
//   r >  threshold, coherent phase seen    -> QftRegimeIndicated
// The numeric threshold (default 1e3) is an operational choice of this
// library; the underlying argument is qualitative.

#include <string>

#include <nlohmann/json.hpp>

#include "iondec/decoherence.hpp"
#include "iondec/matter_db.hpp"
#include "iondec/units.hpp"

namespace iondec {

inline constexpr double kDefaultThresholdRatio = 1e3;

enum class Verdict { ClassicalLimit, QuantumMechanicsAdequate, QftRegimeIndicated };

const char* to_string(Verdict v);

struct RegimeReport {
    Quantity tau1;
    Quantity tau2;
    Quantity tau_dyn;
    bool quantum_coherent_phase_observed;
    double threshold_ratio;
    Verdict verdict;
    double ratio_tau1;  // tau_dyn / tau1
    double ratio_tau2;  // tau_dyn / tau2
    double ratio_dec;   // tau_dyn / min(tau1, tau2)
};

// Throws DomainError for non-positive times or threshold_ratio <= 1.
RegimeReport classify(const Quantity& tau1, const Quantity& tau2, const Quantity& tau_dyn,
                      bool coherent_phase_observed, double threshold_ratio = kDefaultThresholdRatio);

// Inputs, threshold, ratios, verdict and the rule text. Times in seconds.
nlohmann::json to_json(const RegimeReport& report);
RegimeReport regime_report_from_json(const nlohmann::json& j);

inline constexpr double kXRayWavelengthAngstrom = 1.5;
inline constexpr double kXRayPeriodSeconds = 0.5e-18;

struct XRayCheck {
    Quantity tau_X;
    Quantity lambda_X;
    Quantity implied_nX;       // mass density at which tau1 would equal tau_X
    Quantity implied_spacing;  // (formula mass / implied_nX)^(1/3)
};

// implied_nX = rho * tau1 / tau_X, implied_spacing = ((m_cation + m_anion) / implied_nX)^(1/3).
XRayCheck xray_consistency(const DecoherenceContext& ctx, const SaltRecord& record, const Quantity& tau_X,
                           const Quantity& lambda_X = from_angstrom(kXRayWavelengthAngstrom));

nlohmann::json to_json(const XRayCheck& check);

}  // namespace iondec
