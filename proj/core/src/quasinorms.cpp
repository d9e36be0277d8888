#include "wschatten/quasinorms.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "wschatten/errors.hpp"

namespace wschatten {

namespace {

void require_exponent(double p) {
    if (!std::isfinite(p) || !(p > 0.0)) throw InvalidInput("exponent p must be finite and > 0");
}

// Two terms within this relative distance are treated as a tie.
constexpr double kTieSlack = 4.0 * std::numeric_limits<double>::epsilon();

QuasiNormResult discrete_sup(const SingularSpectrum& spec, double p, double cell_scale, bool renormalized) {
    require_exponent(p);
    const double inv_p = 1.0 / p;
    std::vector<double> terms(spec.size());
    double best = 0.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        terms[k] = std::pow(cell_scale * static_cast<double>(k + 1), inv_p) * spec[k];
        if (terms[k] > best) best = terms[k];
    }
    QuasiNormResult out{best, 0, p, renormalized};
    if (best > 0.0) {
        for (std::size_t k = 0; k < terms.size(); ++k) {
            if (terms[k] >= best * (1.0 - kTieSlack)) {
                out.attaining_index = k;
                break;
            }
        }
    }
    return out;
}

} // namespace

QuasiNormResult weak_norm(const SingularSpectrum& spec, double p) {
    return discrete_sup(spec, p, 1.0, false);
}

QuasiNormResult renorm_weak_norm(const SingularSpectrum& spec, double p) {
    return discrete_sup(spec, p, p, true);
}

} // namespace wschatten
