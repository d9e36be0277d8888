#pragma once

#include <cstddef>

#include "wschatten/spectrum.hpp"

namespace wschatten {

/// Value of a weak Schatten quasi-norm together with the spectral cell that
/// realizes it.
///
/// The supremum over real t > 0 is never attained at an interior point: on
/// the cell [k, k+1) the expression t^{1/p} mu(k) increases towards its
/// right-endpoint limit (k+1)^{1/p} mu(k). `attaining_index` is the integer k
/// whose closed cell reaches the supremum, not a value of t. Terms within
/// 4 ulp of the maximum count as ties and the smallest k wins.
struct QuasiNormResult {
    double value = 0.0;
    std::size_t attaining_index = 0;
    double exponent_p = 0.0;
    bool renormalized = false;
};

/// sup_{t>0} t^{1/p} mu(t) = max_k (k+1)^{1/p} mu(k). Requires 0 < p < inf.
QuasiNormResult weak_norm(const SingularSpectrum& spec, double p);

/// sup_{t>0} (p t)^{1/p} mu(t) = max_k (p (k+1))^{1/p} mu(k) = p^{1/p} weak_norm.
QuasiNormResult renorm_weak_norm(const SingularSpectrum& spec, double p);

} // namespace wschatten
