#include "iondec/inequivalence.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "iondec/error.hpp"

namespace iondec {

BogoliubovProfile::BogoliubovProfile(std::vector<std::pair<double, double>> coefficients)
    : coefficients_(std::move(coefficients)) {
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        const auto [u, v] = coefficients_[k];
        if (!(u > 0) || u > 1) {
            throw DomainError("mode " + std::to_string(k) + ": U_k must lie in (0, 1]");
        }
        if (std::abs(u * u + v * v - 1.0) > 1e-12) {
            throw DomainError("mode " + std::to_string(k) + ": U_k^2 + V_k^2 != 1");
        }
    }
}

BogoliubovProfile BogoliubovProfile::uniform(double u, std::size_t modes) {
    const double v = std::sqrt(std::max(0.0, 1.0 - u * u));
    return BogoliubovProfile(std::vector<std::pair<double, double>>(modes, {u, v}));
}

BogoliubovProfile BogoliubovProfile::bcs_like(std::size_t modes, double gap, double half_band) {
    if (!(gap > 0) || !(half_band > 0)) throw DomainError("bcs_like: gap and band must be positive");
    std::vector<std::pair<double, double>> c;
    c.reserve(modes);
    const double cell = 2.0 * half_band / static_cast<double>(modes);
    for (std::size_t k = 0; k < modes; ++k) {
        const double xi = -half_band + (static_cast<double>(k) + 0.5) * cell;
        const double e = std::hypot(xi, gap);
        const double u2 = 0.5 * (1.0 + xi / e);
        const double v2 = 0.5 * (1.0 - xi / e);
        c.emplace_back(std::sqrt(u2), std::sqrt(v2));
    }
    return BogoliubovProfile(std::move(c));
}

BogoliubovProfile BogoliubovProfile::extended(double u) const {
    auto c = coefficients_;
    c.emplace_back(u, std::sqrt(std::max(0.0, 1.0 - u * u)));
    return BogoliubovProfile(std::move(c));
}

double log_vacuum_overlap(const BogoliubovProfile& profile) {
    double sum = 0.0;
    for (const auto& [u, v] : profile.coefficients()) sum += std::log(u);
    return sum;
}

double vacuum_overlap(const BogoliubovProfile& profile) { return std::exp(log_vacuum_overlap(profile)); }

double overlap_decay_rate(const ProfileFamily& family, std::span<const std::size_t> mode_counts) {
    const std::set<std::size_t> distinct(mode_counts.begin(), mode_counts.end());
    if (distinct.size() < 3) throw FitError("overlap_decay_rate needs at least 3 distinct mode counts");

    const auto n = static_cast<double>(mode_counts.size());
    double mean_k = 0.0, mean_y = 0.0;
    std::vector<double> ys;
    ys.reserve(mode_counts.size());
    for (std::size_t k : mode_counts) {
        ys.push_back(log_vacuum_overlap(family(k)));
        mean_k += static_cast<double>(k);
        mean_y += ys.back();
    }
    mean_k /= n;
    mean_y /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < mode_counts.size(); ++i) {
        const double dk = static_cast<double>(mode_counts[i]) - mean_k;
        sxy += dk * (ys[i] - mean_y);
        sxx += dk * dk;
    }
    return sxy / sxx;
}

}  // namespace iondec
