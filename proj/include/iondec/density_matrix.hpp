#pragma once

// Single-ion reduced density matrix on a uniform 1D position grid, evolved
// purely by the multiplicative scattering kernel (no free Hamiltonian).

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "iondec/units.hpp"

namespace iondec {

struct GridSpec {
    std::size_t points = 256;
    double extent_widths = 40.0;  // full grid length in packet widths
};

struct SuperpositionSpec {
    Quantity center_separation{0.0, Dim::Length};
    Quantity packet_width{1.0, Dim::Length};  // standard deviation of |psi|^2 per packet
    double relative_phase = 0.0;               // radians
};

class ReducedDensityMatrix {
public:
    ReducedDensityMatrix(double first_position, double spacing, Eigen::MatrixXcd elements);

    std::size_t size() const noexcept { return static_cast<std::size_t>(elements_.rows()); }
    Quantity spacing() const { return {spacing_, Dim::Length}; }
    Quantity position(std::size_t i) const { return {first_ + spacing_ * static_cast<double>(i), Dim::Length}; }
    Quantity time() const { return {time_, Dim::Time}; }

    const Eigen::MatrixXcd& elements() const noexcept { return elements_; }
    // Elements as prepared, before any evolution.
    const Eigen::MatrixXcd& initial_elements() const noexcept { return initial_; }

    // h * sum_i rho_ii (real part).
    double trace() const;
    // h^2 * sum_ij |rho_ij|^2
    double purity() const;
    // max_ij |rho_ij - conj(rho_ji)|
    double hermiticity_error() const;

    struct Spectrum {
        double min;
        double max;
    };
    // Extreme eigenvalues of h * rho.
    Spectrum spectrum() const;

private:
    friend ReducedDensityMatrix apply_decoherence(const ReducedDensityMatrix&, const Quantity&,
                                                  const Quantity&, const Quantity&);
    double first_;
    double spacing_;
    Eigen::MatrixXcd elements_;
    Eigen::MatrixXcd initial_;
    double time_ = 0.0;
};

// rho = |psi><psi| for psi the normalised sum of two Gaussians centred at
// -separation/2 and +separation/2, the second carrying exp(i phase). The grid
// is centred on 0 with length extent_widths * width. Throws ConfigError if
// either packet comes within 5 widths of the grid edge.
ReducedDensityMatrix prepare_superposition(const SuperpositionSpec& spec, const GridSpec& grid = {});

// Schur product with the decoherence kernel f(x_i - x_j, dt); time advances by dt.
ReducedDensityMatrix apply_decoherence(const ReducedDensityMatrix& rho, const Quantity& rate,
                                       const Quantity& lambda, const Quantity& dt);

// Kernel matrix K_ij = f(x_i - x_j, t) on the grid of rho.
Eigen::MatrixXd decoherence_kernel(const ReducedDensityMatrix& rho, const Quantity& rate,
                                   const Quantity& lambda, const Quantity& t);

// |rho(x_a, x_b)| / |rho_0(x_a, x_b)| where x_a is the grid point nearest the
// left packet centre (-separation/2) and x_b = x_a + round(separation / h).
// Throws ConfigError if the pair falls off the grid or the t = 0 element vanishes.
double coherence_ratio(const ReducedDensityMatrix& rho, const Quantity& separation);

struct CoherenceSample {
    double time;
    double coherence_ratio;
    double trace;
    double min_eigenvalue;
};

// Samples at t = 0 and after each of `steps` equal steps of dt.
std::vector<CoherenceSample> evolve(ReducedDensityMatrix rho, const Quantity& rate,
                                    const Quantity& lambda, const Quantity& dt, std::size_t steps,
                                    const Quantity& separation);

}  // namespace iondec
