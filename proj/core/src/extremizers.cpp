#include "wschatten/extremizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wschatten/errors.hpp"
#include "wschatten/quasinorms.hpp"

namespace wschatten {

namespace {

constexpr double kUnitNormTolerance = 1e-12;

void check_ratio_bound(double ratio, double constant, std::string_view where) {
    if (!(ratio <= constant * (1.0 + kRatioBoundSlack))) {
        throw NumericFailure(std::string(where) + ": ratio " + std::to_string(ratio) +
                             " exceeds the optimal constant " + std::to_string(constant));
    }
}

// Both factors of a pairing probe, with their quasi-norms evaluated once.
struct DiagonalFactors {
    SingularSpectrum t;
    SingularSpectrum s;
    double norm_t;
    double norm_s;
};

DiagonalFactors power_factors(std::size_t n, const HolderExponents& e) {
    DiagonalFactors f{power_diagonal(n, e.p()), power_diagonal(n, e.q()), 0.0, 0.0};
    f.norm_t = weak_norm(f.t, e.p()).value;
    f.norm_s = weak_norm(f.s, e.q()).value;
    if (std::abs(f.norm_t - 1.0) > kUnitNormTolerance || std::abs(f.norm_s - 1.0) > kUnitNormTolerance) {
        throw NumericFailure("diagonal factor quasi-norm differs from 1 beyond 1e-12");
    }
    return f;
}

SaturationRow pairing_row(const DiagonalFactors& f, const PairingExtremizer& ext, Family family) {
    const HolderExponents& e = ext.exponents;
    const QuasiNormResult prod = weak_norm(sorted_products(f.t, f.s, ext.pairing), e.r());
    const double ratio = prod.value / (f.norm_t * f.norm_s);
    const double constant = sz_constant(e);
    check_ratio_bound(ratio, constant, "pairing_ratio");
    return SaturationRow{ext.n, family, e, ext.target_index + 1, ratio, prod.attaining_index, constant,
                         constant - ratio};
}

std::vector<std::size_t> dyadic_targets(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= n; k *= 2) out.push_back(k);
    if (out.back() != n) out.push_back(n);
    return out;
}

} // namespace

SingularSpectrum power_diagonal(std::size_t n, double p) {
    if (n == 0) throw InvalidInput("power_diagonal: n must be >= 1");
    if (!std::isfinite(p) || !(p > 0.0)) throw InvalidInput("power_diagonal: p must be finite and > 0");
    std::vector<double> values(n);
    const double expo = -1.0 / p;
    for (std::size_t k = 0; k < n; ++k) values[k] = std::pow(static_cast<double>(k + 1), expo);
    return SingularSpectrum(std::move(values));
}

double classical_ratio(const SingularSpectrum& spec_t, const SingularSpectrum& spec_s,
                       const SingularSpectrum& spec_ts, const HolderExponents& e, std::size_t* best_index) {
    const double norm_t = weak_norm(spec_t, e.p()).value;
    const double norm_s = weak_norm(spec_s, e.q()).value;
    if (norm_t == 0.0 || norm_s == 0.0) throw InvalidInput("degenerate pair: zero quasi-norm factor");
    const QuasiNormResult prod = weak_norm(spec_ts, e.r());
    if (best_index != nullptr) *best_index = prod.attaining_index;
    return prod.value / (norm_t * norm_s);
}

QuasiNormResult pairing_product_norm(const SingularSpectrum& spec_t, const SingularSpectrum& spec_s,
                                     const Permutation& pairing, const HolderExponents& e) {
    return weak_norm(sorted_products(spec_t, spec_s, pairing), e.r());
}

CommutingRatios commuting_ratio(std::size_t n, const HolderExponents& e) {
    const SingularSpectrum t = power_diagonal(n, e.p());
    const SingularSpectrum s = power_diagonal(n, e.q());
    const SingularSpectrum ts = sorted_products(t, s, Permutation::identity(n));
    const double classical = classical_ratio(t, s, ts, e);
    const double renorm = renorm_weak_norm(ts, e.r()).value /
                          (renorm_weak_norm(t, e.p()).value * renorm_weak_norm(s, e.q()).value);
    return {classical, renorm};
}

PairingExtremizer anti_chain_pairing(std::size_t n, const HolderExponents& e, std::size_t k0) {
    if (k0 < 1 || k0 > n) {
        throw InvalidInput("anti_chain_pairing: k0 = " + std::to_string(k0) + " outside [1, " + std::to_string(n) +
                           "]");
    }
    std::vector<std::size_t> image(n);
    // Row t - 1 takes column j_t - 1 with j_{k0} = 1 and j_t = j_{t+1} + 1.
    std::size_t column = 0;
    double threshold = std::numeric_limits<double>::infinity();
    for (std::size_t t = k0; t >= 1; --t) {
        image[t - 1] = column;
        const double product = std::pow(static_cast<double>(t), -1.0 / e.p()) *
                               std::pow(static_cast<double>(column + 1), -1.0 / e.q());
        threshold = std::min(threshold, product);
        ++column;
    }
    // Leftover rows and columns are both {k0, ..., n-1}; match them in order.
    for (std::size_t i = k0; i < n; ++i) image[i] = i;
    return PairingExtremizer{n, e, Permutation(std::move(image)), k0 - 1, threshold};
}

std::string_view family_name(Family f) noexcept {
    switch (f) {
    case Family::commuting: return "commuting";
    case Family::pairing: return "pairing";
    case Family::pairing_best: return "pairing-best";
    case Family::search: return "search";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
    if (name == "commuting") return Family::commuting;
    if (name == "pairing") return Family::pairing;
    if (name == "pairing-best") return Family::pairing_best;
    return std::nullopt;
}

SaturationRow pairing_ratio(const PairingExtremizer& ext) {
    return pairing_row(power_factors(ext.n, ext.exponents), ext, Family::pairing);
}

std::size_t default_k0(std::size_t n) noexcept {
    const auto k0 = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    return std::clamp<std::size_t>(k0, 1, std::max<std::size_t>(n, 1));
}

std::vector<SaturationRow> saturation_sweep(const HolderExponents& e, std::span<const std::size_t> sizes,
                                            std::span<const Family> families, const SweepOptions& options) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] == 0) throw InvalidInput("saturation_sweep: sizes must be positive");
        if (i > 0 && sizes[i] <= sizes[i - 1]) throw InvalidInput("saturation_sweep: sizes must be ascending");
    }
    const double constant = sz_constant(e);
    std::vector<SaturationRow> rows;
    rows.reserve(sizes.size() * families.size());
    for (const std::size_t n : sizes) {
        const DiagonalFactors factors = power_factors(n, e);
        for (const Family family : families) {
            switch (family) {
            case Family::commuting: {
                std::size_t idx = 0;
                const SingularSpectrum ts = sorted_products(factors.t, factors.s, Permutation::identity(n));
                const double ratio = classical_ratio(factors.t, factors.s, ts, e, &idx);
                check_ratio_bound(ratio, constant, "commuting");
                rows.push_back({n, family, e, 0, ratio, idx, constant, constant - ratio});
                break;
            }
            case Family::pairing: {
                const std::size_t k0 = std::min(options.fixed_k0.value_or(default_k0(n)), n);
                rows.push_back(pairing_row(factors, anti_chain_pairing(n, e, std::max<std::size_t>(k0, 1)), family));
                break;
            }
            case Family::pairing_best: {
                std::optional<SaturationRow> best;
                for (const std::size_t k0 : dyadic_targets(n)) {
                    SaturationRow row = pairing_row(factors, anti_chain_pairing(n, e, k0), family);
                    if (!best || row.best_ratio > best->best_ratio) best = row;
                }
                rows.push_back(*best);
                break;
            }
            case Family::search:
                throw InvalidInput("saturation_sweep: 'search' is not a sweep family");
            }
        }
    }
    return rows;
}

std::vector<std::size_t> default_sweep_sizes() {
    std::vector<std::size_t> sizes;
    for (int k = 6; k <= 20; ++k) sizes.push_back(std::size_t{1} << k);
    return sizes;
}

SaturationRow random_ratio_search(const HolderExponents& e, std::size_t dim, std::size_t trials, RandomSeed seed) {
    if (dim < 1 || dim > 512) throw InvalidInput("random_ratio_search: dim must be in [1, 512]");
    if (trials < 1) throw InvalidInput("random_ratio_search: trials must be >= 1");
    const double constant = sz_constant(e);
    const SingularSpectrum diag_t = power_diagonal(dim, e.p());
    const SingularSpectrum diag_s = power_diagonal(dim, e.q());

    SaturationRow best{dim, Family::search, e, 0, 0.0, 0, constant, constant};
    auto consider = [&](double ratio, std::size_t idx) {
        check_ratio_bound(ratio, constant, "random_ratio_search");
        if (ratio > best.best_ratio) {
            best.best_ratio = ratio;
            best.best_index = idx;
            best.gap = constant - ratio;
        }
    };

    for (std::size_t i = 0; i < trials; ++i) {
        const ProductSpectra spectra = product_spectra(random_ginibre(dim, derive_seed(seed, 3 * i)),
                                                       random_ginibre(dim, derive_seed(seed, 3 * i + 1)));
        std::size_t idx = 0;
        consider(classical_ratio(spectra.t, spectra.s, spectra.ts, e, &idx), idx);

        const Permutation pairing = random_permutation(dim, derive_seed(seed, 3 * i + 2));
        const SingularSpectrum ts = sorted_products(diag_t, diag_s, pairing);
        consider(classical_ratio(diag_t, diag_s, ts, e, &idx), idx);
    }
    return best;
}

} // namespace wschatten
