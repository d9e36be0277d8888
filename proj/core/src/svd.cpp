#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "wschatten/errors.hpp"
#include "wschatten/spectrum.hpp"

namespace wschatten {

namespace {

constexpr double kOrthogonalityTolerance = 1e-14;
constexpr int kMaxSweeps = 60;

struct ColumnView {
    std::size_t length;
    std::vector<Complex> data; // column-major, `length` entries per column

    Complex* col(std::size_t j) noexcept { return data.data() + j * length; }
};

// Work on whichever of a, a* has fewer columns so that exactly
// min(rows, cols) column norms come out.
ColumnView working_columns(const ComplexMatrix& a, std::size_t& ncols) {
    const bool tall = a.rows() >= a.cols();
    const std::size_t m = tall ? a.rows() : a.cols();
    ncols = tall ? a.cols() : a.rows();
    ColumnView w{m, std::vector<Complex>(m * ncols)};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (tall) {
                w.data[j * m + i] = a(i, j);
            } else {
                w.data[i * m + j] = std::conj(a(i, j));
            }
        }
    }
    return w;
}

double column_norm_sq(const Complex* x, std::size_t m) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::norm(x[i]);
    return s;
}

} // namespace

SingularSpectrum singular_values(const ComplexMatrix& a) {
    for (const auto& z : a.entries()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidInput("singular_values: non-finite entry");
        }
    }

    std::size_t n = 0;
    ColumnView w = working_columns(a, n);
    const std::size_t m = w.length;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Complex* ai = w.col(i);
                Complex* aj = w.col(j);
                const double alpha = column_norm_sq(ai, m);
                const double beta = column_norm_sq(aj, m);
                if (alpha == 0.0 || beta == 0.0) continue;

                Complex gamma{};
                for (std::size_t k = 0; k < m; ++k) gamma += std::conj(ai[k]) * aj[k];
                const double g = std::abs(gamma);
                if (g <= kOrthogonalityTolerance * std::sqrt(alpha) * std::sqrt(beta)) continue;
                converged = false;

                // Rotate a_i against e^{-i phase(gamma)} a_j, which has a real
                // positive inner product g with a_i.
                const Complex phase = gamma / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = c * t;
                for (std::size_t k = 0; k < m; ++k) {
                    const Complex x = ai[k];
                    const Complex y = aj[k] * std::conj(phase);
                    ai[k] = c * x - s * y;
                    aj[k] = s * x + c * y;
                }
            }
        }
    }
    if (!converged) {
        throw NumericFailure("singular_values: Jacobi iteration did not converge in " +
                             std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::max(0.0, std::sqrt(column_norm_sq(w.col(j), m)));
    std::stable_sort(sigma.begin(), sigma.end(), std::greater<>());
    return SingularSpectrum(std::move(sigma));
}

} // namespace wschatten
