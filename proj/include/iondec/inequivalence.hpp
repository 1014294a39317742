#pragma once

// Finite-mode overlap between the normal vacuum and a BCS-like vacuum,
//   <0|0(BCS)> = prod_k U_k,   U_k^2 + V_k^2 = 1,
// with the mode count K standing in for the volume.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace iondec {

class BogoliubovProfile {
public:
    BogoliubovProfile() = default;
    // Throws DomainError unless 0 < U_k <= 1 and |U_k^2 + V_k^2 - 1| <= 1e-12.
    explicit BogoliubovProfile(std::vector<std::pair<double, double>> coefficients);

    static BogoliubovProfile uniform(double u, std::size_t modes);

    // xi_k at the midpoints of K equal cells on [-half_band, half_band];
    // V_k^2 = (1 - xi_k / sqrt(xi_k^2 + gap^2)) / 2.
    static BogoliubovProfile bcs_like(std::size_t modes, double gap = 0.2, double half_band = 1.0);

    std::size_t mode_count() const noexcept { return coefficients_.size(); }
    std::span<const std::pair<double, double>> coefficients() const noexcept { return coefficients_; }

    BogoliubovProfile extended(double u) const;

private:
    std::vector<std::pair<double, double>> coefficients_;
};

// prod_k U_k evaluated as exp(sum_k ln U_k).
double vacuum_overlap(const BogoliubovProfile& profile);
double log_vacuum_overlap(const BogoliubovProfile& profile);

using ProfileFamily = std::function<BogoliubovProfile(std::size_t)>;

// Least-squares slope of ln(overlap) against K. Throws FitError for fewer than
// three distinct mode counts.
double overlap_decay_rate(const ProfileFamily& family, std::span<const std::size_t> mode_counts);

}  // namespace iondec
