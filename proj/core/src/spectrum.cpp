#include "wschatten/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "wschatten/errors.hpp"

namespace wschatten {

SingularSpectrum::SingularSpectrum(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t k = 0; k < values_.size(); ++k) {
        const double v = values_[k];
        if (!std::isfinite(v)) throw InvalidInput("spectrum[" + std::to_string(k) + "] is not finite");
        if (v < 0.0) throw InvalidInput("spectrum[" + std::to_string(k) + "] is negative");
        if (k > 0 && v > values_[k - 1]) {
            throw InvalidInput("spectrum[" + std::to_string(k) + "] exceeds spectrum[" + std::to_string(k - 1) +
                               "]: values must be non-increasing");
        }
    }
}

SingularSpectrum SingularSpectrum::scaled(double c) const {
    if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidInput("scale factor must be finite and >= 0");
    std::vector<double> out(values_);
    for (auto& v : out) v *= c;
    return SingularSpectrum(std::move(out));
}

SingularSpectrum from_matrix(const ComplexMatrix& a) {
    return singular_values(a);
}

double mu_at(const SingularSpectrum& spec, double t) {
    if (!std::isfinite(t) || t < 0.0) throw InvalidInput("mu_at: t must be finite and >= 0");
    const double cell = std::floor(t);
    if (cell >= static_cast<double>(spec.size())) return 0.0;
    return spec[static_cast<std::size_t>(cell)];
}

std::vector<HornViolation> horn_check(const SingularSpectrum& spec_ts, const SingularSpectrum& spec_t,
                                      const SingularSpectrum& spec_s, double rel_tol) {
    if (!(rel_tol >= 0.0)) throw InvalidInput("horn_check: rel_tol must be >= 0");
    if (spec_ts.size() > kHornMaxLength) {
        throw InvalidInput("horn_check: spectrum length " + std::to_string(spec_ts.size()) + " exceeds cap " +
                           std::to_string(kHornMaxLength));
    }
    constexpr double kZeroThreshold = 1e-300;
    std::vector<HornViolation> violations;
    const std::size_t len = spec_ts.size();
    for (std::size_t j = 0; j < len; ++j) {
        for (std::size_t k = 0; j + k < len; ++k) {
            const double lhs = spec_ts[j + k];
            const double rhs = spec_t[j] * spec_s[k];
            const bool violated = rhs == 0.0 ? lhs > kZeroThreshold : lhs > rhs * (1.0 + rel_tol);
            if (violated) violations.push_back({j, k, lhs, rhs});
        }
    }
    return violations;
}

SingularSpectrum sorted_products(const SingularSpectrum& spec_t, const SingularSpectrum& spec_s,
                                 const Permutation& pairing) {
    if (spec_t.size() != spec_s.size()) {
        throw InvalidInput("sorted_products: length mismatch " + std::to_string(spec_t.size()) + " vs " +
                           std::to_string(spec_s.size()));
    }
    if (pairing.size() != spec_t.size()) {
        throw InvalidInput("sorted_products: pairing size " + std::to_string(pairing.size()) +
                           " does not match spectrum length " + std::to_string(spec_t.size()));
    }
    std::vector<double> products(spec_t.size());
    for (std::size_t i = 0; i < products.size(); ++i) products[i] = spec_t[i] * spec_s[pairing[i]];
    std::sort(products.begin(), products.end(), std::greater<>());
    return SingularSpectrum(std::move(products));
}

} // namespace wschatten
