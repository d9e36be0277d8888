#pragma once

#include <utility>

#include "wschatten/complex_matrix.hpp"
#include "wschatten/spectrum.hpp"

namespace wschatten {

/// Exponents p, q, r > 0 with 1/r = 1/p + 1/q.
class HolderExponents {
public:
    /// r = pq / (p + q).
    static HolderExponents from_pq(double p, double q);
    /// Validates |1/r - 1/p - 1/q| <= 1e-12 / r.
    HolderExponents(double p, double q, double r);

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }
    double r() const noexcept { return r_; }

    friend bool operator==(const HolderExponents&, const HolderExponents&) = default;

private:
    double p_;
    double q_;
    double r_;
};

HolderExponents make_exponents(double p, double q);

/// (p+q)^{1/p+1/q} / (q^{1/p} p^{1/q}), optimal constant of the classical form.
double sz_constant(const HolderExponents& e);

/// p^{1/p} q^{1/q} / r^{1/r}; algebraically equal to sz_constant.
double renorm_constant(const HolderExponents& e);

inline constexpr double kHolderDefaultTolerance = 1e-9;

struct HolderReport {
    HolderExponents exponents;
    double norm_t;       ///< ||T||_{p,inf}
    double norm_s;       ///< ||S||_{q,inf}
    double norm_ts;      ///< ||TS||_{r,inf}
    double ratio;        ///< norm_ts / (norm_t norm_s)
    double sz_constant;
    bool classical_ok;   ///< ratio <= sz_constant (1 + tol)
    double renorm_ratio; ///< same ratio in the renormalized quasi-norms
    bool renorm_ok;      ///< renorm_ratio <= 1 + tol
};

/// Spectra of T, S and TS, computed once and reused across exponent cells.
struct ProductSpectra {
    SingularSpectrum t;
    SingularSpectrum s;
    SingularSpectrum ts;
};

ProductSpectra product_spectra(const ComplexMatrix& t, const ComplexMatrix& s);

/// Throws InvalidInput("degenerate pair ...") when either factor has zero norm.
HolderReport holder_report(const ProductSpectra& spectra, const HolderExponents& e,
                           double tol = kHolderDefaultTolerance);

HolderReport holder_report(const ComplexMatrix& t, const ComplexMatrix& s, const HolderExponents& e,
                           double tol = kHolderDefaultTolerance);

struct ChainValues {
    double lhs; ///< t^{1/r} mu(t/r, TS)
    double rhs; ///< t^{1/p} mu(t/p, T) * t^{1/q} mu(t/q, S)
};

/// One step of the pointwise chain behind the renormalized inequality.
/// The argument t/r of mu(., TS) is evaluated as t/p + t/q, so that
/// floor(t/p) + floor(t/q) <= floor(t/r) holds in floating point too.
ChainValues pointwise_chain(const SingularSpectrum& spec_ts, const SingularSpectrum& spec_t,
                            const SingularSpectrum& spec_s, const HolderExponents& e, double t);

} // namespace wschatten
