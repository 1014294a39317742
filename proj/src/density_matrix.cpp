#include "iondec/density_matrix.hpp"

#include <cmath>

#include "iondec/decoherence.hpp"

namespace iondec {

ReducedDensityMatrix::ReducedDensityMatrix(double first_position, double spacing, Eigen::MatrixXcd elements)
    : first_(first_position), spacing_(spacing), elements_(std::move(elements)), initial_(elements_) {
    if (elements_.rows() != elements_.cols() || elements_.rows() == 0) {
        throw ConfigError("density matrix must be square and nonempty");
    }
    if (!(spacing_ > 0)) throw ConfigError("grid spacing must be positive");
}

double ReducedDensityMatrix::trace() const { return spacing_ * elements_.diagonal().real().sum(); }

double ReducedDensityMatrix::purity() const {
    return spacing_ * spacing_ * elements_.cwiseAbs2().sum();
}

double ReducedDensityMatrix::hermiticity_error() const {
    return (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
}

ReducedDensityMatrix::Spectrum ReducedDensityMatrix::spectrum() const {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(spacing_ * elements_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("eigenvalue solver did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.minCoeff(), ev.maxCoeff()};
}

ReducedDensityMatrix prepare_superposition(const SuperpositionSpec& spec, const GridSpec& grid) {
    const double sep = spec.center_separation.in(Dim::Length);
    const double width = spec.packet_width.in(Dim::Length);
    if (sep < 0) throw ConfigError("packet separation must be >= 0");
    if (!(width > 0)) throw ConfigError("packet width must be positive");
    if (grid.points < 2) throw ConfigError("grid needs at least 2 points");
    if (!(grid.extent_widths > 0)) throw ConfigError("grid extent must be positive");

    const double extent = grid.extent_widths * width;
    if (sep / 2 + 5 * width > extent / 2) {
        throw ConfigError("packets do not fit: separation/2 + 5 widths exceeds the grid half-length");
    }
    const auto m = static_cast<Eigen::Index>(grid.points);
    const double h = extent / static_cast<double>(grid.points);
    const double x0 = -extent / 2 + h / 2;

    const std::complex<double> phase = std::polar(1.0, spec.relative_phase);
    Eigen::VectorXcd psi(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double x = x0 + h * static_cast<double>(i);
        const double left = (x + sep / 2) / width;
        const double right = (x - sep / 2) / width;
        psi(i) = std::exp(-0.25 * left * left) + phase * std::exp(-0.25 * right * right);
    }
    const double norm2 = h * psi.squaredNorm();
    if (!(norm2 > 0)) throw ConfigError("superposition vanishes on the grid");
    psi /= std::sqrt(norm2);

    Eigen::MatrixXcd rho = psi * psi.adjoint();
    return {x0, h, std::move(rho)};
}

namespace {

// f(k h, t) for k = 0..M-1; the kernel depends only on |i - j|.
std::vector<double> kernel_row(const ReducedDensityMatrix& rho, const Quantity& rate,
                               const Quantity& lambda, const Quantity& t) {
    std::vector<double> row(rho.size());
    const Quantity h = rho.spacing();
    for (std::size_t k = 0; k < row.size(); ++k) {
        row[k] = decoherence_factor(h * static_cast<double>(k), t, lambda, rate);
    }
    return row;
}

}  // namespace

ReducedDensityMatrix apply_decoherence(const ReducedDensityMatrix& rho, const Quantity& rate,
                                       const Quantity& lambda, const Quantity& dt) {
    if (dt.in(Dim::Time) < 0) throw DomainError("apply_decoherence: negative time step");
    const auto row = kernel_row(rho, rate, lambda, dt);
    ReducedDensityMatrix out = rho;
    const auto m = out.elements_.rows();
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index i = 0; i < m; ++i) {
            out.elements_(i, j) *= row[static_cast<std::size_t>(std::abs(i - j))];
        }
    }
    out.time_ += dt.si();
    return out;
}

Eigen::MatrixXd decoherence_kernel(const ReducedDensityMatrix& rho, const Quantity& rate,
                                   const Quantity& lambda, const Quantity& t) {
    const auto row = kernel_row(rho, rate, lambda, t);
    const auto m = static_cast<Eigen::Index>(rho.size());
    Eigen::MatrixXd k(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index i = 0; i < m; ++i) k(i, j) = row[static_cast<std::size_t>(std::abs(i - j))];
    }
    return k;
}

double coherence_ratio(const ReducedDensityMatrix& rho, const Quantity& separation) {
    const double sep = separation.in(Dim::Length);
    if (sep < 0) throw ConfigError("coherence_ratio: separation must be >= 0");
    const double h = rho.spacing().si();
    const double x0 = rho.position(0).si();
    const auto m = static_cast<long long>(rho.size());

    const long long a = std::llround((-sep / 2 - x0) / h);
    const long long offset = std::llround(sep / h);
    const long long b = a + offset;
    if (a < 0 || b >= m) throw ConfigError("coherence_ratio: separation not resolvable on the grid");

    const auto ia = static_cast<Eigen::Index>(a);
    const auto ib = static_cast<Eigen::Index>(b);
    const double initial = std::abs(rho.initial_elements()(ia, ib));
    if (!(initial > 0)) throw ConfigError("coherence_ratio: initial coherence vanishes at this separation");
    return std::abs(rho.elements()(ia, ib)) / initial;
}

std::vector<CoherenceSample> evolve(ReducedDensityMatrix rho, const Quantity& rate, const Quantity& lambda,
                                    const Quantity& dt, std::size_t steps, const Quantity& separation) {
    std::vector<CoherenceSample> out;
    out.reserve(steps + 1);
    auto sample = [&] {
        out.push_back({rho.time().si(), coherence_ratio(rho, separation), rho.trace(), rho.spectrum().min});
    };
    sample();
    for (std::size_t s = 0; s < steps; ++s) {
        rho = apply_decoherence(rho, rate, lambda, dt);
        sample();
    }
    return out;
}

}  // namespace iondec
