#include "wschatten/holder.hpp"

#include <cmath>

#include "wschatten/errors.hpp"
#include "wschatten/quasinorms.hpp"

namespace wschatten {

namespace {

bool positive_finite(double x) noexcept {
    return std::isfinite(x) && x > 0.0;
}

} // namespace

HolderExponents HolderExponents::from_pq(double p, double q) {
    if (!positive_finite(p) || !positive_finite(q)) throw InvalidInput("exponents p, q must be finite and > 0");
    return HolderExponents(p, q, p * q / (p + q));
}

HolderExponents::HolderExponents(double p, double q, double r) : p_(p), q_(q), r_(r) {
    if (!positive_finite(p) || !positive_finite(q) || !positive_finite(r)) {
        throw InvalidInput("exponents p, q, r must be finite and > 0");
    }
    if (std::abs(1.0 / r - 1.0 / p - 1.0 / q) > 1e-12 * (1.0 / r)) {
        throw InvalidInput("exponents violate 1/r = 1/p + 1/q");
    }
}

HolderExponents make_exponents(double p, double q) {
    return HolderExponents::from_pq(p, q);
}

double sz_constant(const HolderExponents& e) {
    const double p = e.p();
    const double q = e.q();
    return std::pow(p + q, 1.0 / p + 1.0 / q) / (std::pow(q, 1.0 / p) * std::pow(p, 1.0 / q));
}

double renorm_constant(const HolderExponents& e) {
    const double p = e.p();
    const double q = e.q();
    const double r = e.r();
    return std::pow(p, 1.0 / p) * std::pow(q, 1.0 / q) / std::pow(r, 1.0 / r);
}

ProductSpectra product_spectra(const ComplexMatrix& t, const ComplexMatrix& s) {
    const ComplexMatrix ts = multiply(t, s);
    return {singular_values(t), singular_values(s), singular_values(ts)};
}

HolderReport holder_report(const ProductSpectra& spectra, const HolderExponents& e, double tol) {
    if (!(tol >= 0.0)) throw InvalidInput("tolerance must be >= 0");
    const double norm_t = weak_norm(spectra.t, e.p()).value;
    const double norm_s = weak_norm(spectra.s, e.q()).value;
    if (norm_t == 0.0 || norm_s == 0.0) {
        throw InvalidInput("degenerate pair: zero quasi-norm factor, ratio undefined");
    }
    const double norm_ts = weak_norm(spectra.ts, e.r()).value;
    const double ratio = norm_ts / (norm_t * norm_s);
    const double constant = sz_constant(e);

    const double renorm_t = renorm_weak_norm(spectra.t, e.p()).value;
    const double renorm_s = renorm_weak_norm(spectra.s, e.q()).value;
    const double renorm_ts = renorm_weak_norm(spectra.ts, e.r()).value;
    const double renorm_ratio = renorm_ts / (renorm_t * renorm_s);

    return HolderReport{
        .exponents = e,
        .norm_t = norm_t,
        .norm_s = norm_s,
        .norm_ts = norm_ts,
        .ratio = ratio,
        .sz_constant = constant,
        .classical_ok = ratio <= constant * (1.0 + tol),
        .renorm_ratio = renorm_ratio,
        .renorm_ok = renorm_ratio <= 1.0 + tol,
    };
}

HolderReport holder_report(const ComplexMatrix& t, const ComplexMatrix& s, const HolderExponents& e, double tol) {
    if (t.cols() != s.rows()) throw InvalidInput("holder_report: t.cols != s.rows");
    return holder_report(product_spectra(t, s), e, tol);
}

ChainValues pointwise_chain(const SingularSpectrum& spec_ts, const SingularSpectrum& spec_t,
                            const SingularSpectrum& spec_s, const HolderExponents& e, double t) {
    if (!std::isfinite(t) || !(t > 0.0)) throw InvalidInput("pointwise_chain: t must be finite and > 0");
    const double tp = t / e.p();
    const double tq = t / e.q();
    const double lhs = std::pow(t, 1.0 / e.r()) * mu_at(spec_ts, tp + tq);
    const double rhs = std::pow(t, 1.0 / e.p()) * mu_at(spec_t, tp) * std::pow(t, 1.0 / e.q()) * mu_at(spec_s, tq);
    return {lhs, rhs};
}

} // namespace wschatten
