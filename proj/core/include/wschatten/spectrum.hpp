#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "wschatten/complex_matrix.hpp"

namespace wschatten {

/// Non-increasing, non-negative finite sequence mu(0) >= mu(1) >= ... with an
/// implicit zero tail. An empty spectrum is the zero operator.
class SingularSpectrum {
public:
    SingularSpectrum() = default;
    /// Throws InvalidInput unless values are finite, non-negative and non-increasing.
    explicit SingularSpectrum(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const double> values() const& noexcept { return values_; }
    /// On a temporary, hands over the storage so range-for stays valid.
    std::vector<double> values() && noexcept { return std::move(values_); }

    /// mu(k); zero past the stored length.
    double operator[](std::size_t k) const noexcept { return k < values_.size() ? values_[k] : 0.0; }

    /// Multiplies every value by c >= 0.
    SingularSpectrum scaled(double c) const;

    friend bool operator==(const SingularSpectrum&, const SingularSpectrum&) = default;

private:
    std::vector<double> values_;
};

/// Singular values of `a`, min(rows, cols) of them, sorted non-increasing.
///
/// One-sided (Hestenes) Jacobi orthogonalization of the columns of `a` (or of
/// a* when a is wide). A column pair is rotated while |<a_i, a_j>| exceeds
/// 1e-14 * |a_i| |a_j|; the iteration stops after the first sweep with no
/// rotation and throws NumericFailure if 60 sweeps are not enough. Column
/// norms are the singular values; negative round-off is clamped to 0.
SingularSpectrum singular_values(const ComplexMatrix& a);

/// Same as singular_values; named for the spectrum-centric call sites.
SingularSpectrum from_matrix(const ComplexMatrix& a);

/// Step-function view mu(t) = mu(floor(t)). Throws InvalidInput for t < 0 or non-finite t.
double mu_at(const SingularSpectrum& spec, double t);

struct HornViolation {
    std::size_t j;
    std::size_t k;
    double lhs; ///< mu(j + k, TS)
    double rhs; ///< mu(j, T) * mu(k, S)
};

inline constexpr std::size_t kHornMaxLength = 4096;
inline constexpr double kHornDefaultTolerance = 1e-10;

/// Checks mu(j + k, TS) <= mu(j, T) mu(k, S) (1 + rel_tol) for every integer
/// pair with j + k < spec_ts.size().
///
/// Since mu is constant on [k, k + 1) and non-increasing, the largest
/// left-hand side on a cell [j, j+1) x [k, k+1) of real arguments sits at the
/// left corner while the right-hand side is constant on the cell; checking the
/// integer lattice is therefore equivalent to checking all real t1, t2 >= 0.
/// When the right-hand side is zero the comparison is against 1e-300.
///
/// Throws InvalidInput if spec_ts is longer than kHornMaxLength or rel_tol < 0.
std::vector<HornViolation> horn_check(const SingularSpectrum& spec_ts, const SingularSpectrum& spec_t,
                                      const SingularSpectrum& spec_s, double rel_tol = kHornDefaultTolerance);

/// Spectrum of D_T P D_S: the multiset {spec_t[i] * spec_s[pairing[i]]} sorted
/// non-increasing. Requires equal lengths matching the pairing.
SingularSpectrum sorted_products(const SingularSpectrum& spec_t, const SingularSpectrum& spec_s,
                                 const Permutation& pairing);

} // namespace wschatten
