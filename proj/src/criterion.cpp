#include "iondec/criterion.hpp"

#include <algorithm>
#include <cmath>

namespace iondec {

namespace {

constexpr const char* kRule =
    "tau_dec = min(tau1, tau2); r = tau_dyn / tau_dec; "
    "r <= threshold -> QuantumMechanicsAdequate; "
    "r > threshold and no coherent phase observed -> ClassicalLimit; "
    "r > threshold and coherent phase observed -> QftRegimeIndicated";

constexpr const char* kProvenance =
    "threshold and three-branch rule are an operational choice of this tool; "
    "coherent_phase_observed is a user assertion, not inferred";

Verdict verdict_from_string(const std::string& s) {
    for (Verdict v : {Verdict::ClassicalLimit, Verdict::QuantumMechanicsAdequate, Verdict::QftRegimeIndicated}) {
        if (s == to_string(v)) return v;
    }
    throw DomainError("unknown verdict '" + s + "'");
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::ClassicalLimit: return "ClassicalLimit";
        case Verdict::QuantumMechanicsAdequate: return "QuantumMechanicsAdequate";
        case Verdict::QftRegimeIndicated: return "QftRegimeIndicated";
    }
    return "?";
}

RegimeReport classify(const Quantity& tau1, const Quantity& tau2, const Quantity& tau_dyn,
                      bool coherent_phase_observed, double threshold_ratio) {
    const double t1 = tau1.in(Dim::Time);
    const double t2 = tau2.in(Dim::Time);
    const double td = tau_dyn.in(Dim::Time);
    if (!(t1 > 0) || !(t2 > 0) || !(td > 0)) throw DomainError("classify: times must be positive");
    if (!(threshold_ratio > 1) || !std::isfinite(threshold_ratio)) {
        throw DomainError("classify: threshold ratio must be finite and > 1");
    }
    const double ratio = td / std::min(t1, t2);
    Verdict verdict = Verdict::QuantumMechanicsAdequate;
    if (ratio > threshold_ratio) {
        verdict = coherent_phase_observed ? Verdict::QftRegimeIndicated : Verdict::ClassicalLimit;
    }
    return {tau1, tau2, tau_dyn, coherent_phase_observed, threshold_ratio, verdict, td / t1, td / t2, ratio};
}

nlohmann::json to_json(const RegimeReport& r) {
    return {
        {"inputs",
         {{"tau1_s", r.tau1.si()},
          {"tau2_s", r.tau2.si()},
          {"tau_dyn_s", r.tau_dyn.si()},
          {"coherent_phase_observed", r.quantum_coherent_phase_observed}}},
        {"threshold_ratio", r.threshold_ratio},
        {"ratios", {{"tau_dyn/tau1", r.ratio_tau1}, {"tau_dyn/tau2", r.ratio_tau2}, {"tau_dyn/tau_dec", r.ratio_dec}}},
        {"verdict", to_string(r.verdict)},
        {"rule", kRule},
        {"provenance", kProvenance},
    };
}

RegimeReport regime_report_from_json(const nlohmann::json& j) {
    const auto& in = j.at("inputs");
    const auto& ratios = j.at("ratios");
    return {Quantity(in.at("tau1_s").get<double>(), Dim::Time),
            Quantity(in.at("tau2_s").get<double>(), Dim::Time),
            Quantity(in.at("tau_dyn_s").get<double>(), Dim::Time),
            in.at("coherent_phase_observed").get<bool>(),
            j.at("threshold_ratio").get<double>(),
            verdict_from_string(j.at("verdict").get<std::string>()),
            ratios.at("tau_dyn/tau1").get<double>(),
            ratios.at("tau_dyn/tau2").get<double>(),
            ratios.at("tau_dyn/tau_dec").get<double>()};
}

XRayCheck xray_consistency(const DecoherenceContext& ctx, const SaltRecord& record, const Quantity& tau_X,
                           const Quantity& lambda_X) {
    if (!(tau_X.in(Dim::Time) > 0)) throw DomainError("xray_consistency: tau_X must be positive");
    if (!(lambda_X.in(Dim::Length) > 0)) throw DomainError("xray_consistency: lambda_X must be positive");
    const Quantity t1 = tau1(ctx);
    const Quantity n_x = record.mass_density_at_crystallization * (t1 / tau_X).in(Dim::Dimensionless);
    const Quantity spacing = cbrt(record.formula_mass() / n_x);
    return {tau_X, lambda_X, n_x, spacing};
}

nlohmann::json to_json(const XRayCheck& c) {
    return {
        {"tau_x_s", c.tau_X.si()},
        {"lambda_x_m", c.lambda_X.si()},
        {"implied_nx_kg_m3", c.implied_nX.si()},
        {"implied_spacing_m", c.implied_spacing.si()},
    };
}

}  // namespace iondec
