#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wschatten/complex_matrix.hpp"
#include "wschatten/holder.hpp"
#include "wschatten/quasinorms.hpp"
#include "wschatten/random.hpp"
#include "wschatten/spectrum.hpp"

namespace wschatten {

/// Spectrum ((k+1)^{-1/p}) for k = 0..n-1.
SingularSpectrum power_diagonal(std::size_t n, double p);

struct CommutingRatios {
    double classical_ratio;
    double renorm_ratio;
};

/// Ratios for T = diag((k+1)^{-1/p}), S = diag((k+1)^{-1/q}); TS is diagonal
/// with componentwise products.
CommutingRatios commuting_ratio(std::size_t n, const HolderExponents& e);

/// D_T P D_S probe targeting the k0-th largest product (target_index = k0 - 1).
struct PairingExtremizer {
    std::size_t n;
    HolderExponents exponents;
    Permutation pairing;
    std::size_t target_index;
    /// Smallest of the k0 targeted products.
    double threshold;
};

/// Pairs rows 0..k0-1 of diag((k+1)^{-1/p}) with columns of diag((k+1)^{-1/q})
/// so that the k0-th largest product is as large as possible, then completes
/// the rest in order.
///
/// Row t (1-based) may use column j when t^{-1/p} j^{-1/q} >= theta, i.e.
/// j <= a t^{-q/p} with a = theta^{-q}. These admissible sets shrink as t
/// grows, so walking t = k0 down to 1 and giving each row the smallest column
/// not yet used (j_t = j_{t+1} + 1) realizes every feasible threshold. The
/// resulting threshold is theta = min_t t^{-1/p} (k0 + 1 - t)^{-1/q}.
PairingExtremizer anti_chain_pairing(std::size_t n, const HolderExponents& e, std::size_t k0);

enum class Family { commuting, pairing, pairing_best, search };

std::string_view family_name(Family f) noexcept;
/// Parses "commuting", "pairing", "pairing-best"; nullopt otherwise.
std::optional<Family> parse_family(std::string_view name) noexcept;

struct SaturationRow {
    std::size_t n;
    Family family;
    HolderExponents exponents;
    std::size_t k0;  ///< 0 where no pairing target applies
    double best_ratio;
    std::size_t best_index;
    double constant; ///< sz_constant(exponents)
    double gap;      ///< constant - best_ratio
};

inline constexpr double kRatioBoundSlack = 1e-9;

/// Classical ratio ||TS||_{r,inf} / (||T||_{p,inf} ||S||_{q,inf}) for a
/// diagonal-pairing operator built from arbitrary spectra.
QuasiNormResult pairing_product_norm(const SingularSpectrum& spec_t, const SingularSpectrum& spec_s,
                                     const Permutation& pairing, const HolderExponents& e);

double classical_ratio(const SingularSpectrum& spec_t, const SingularSpectrum& spec_s,
                       const SingularSpectrum& spec_ts, const HolderExponents& e,
                       std::size_t* best_index = nullptr);

/// Evaluates the probe through sorted_products. Throws NumericFailure if a
/// factor norm drifts from 1 by more than 1e-12 or the ratio breaks the
/// sz_constant bound.
SaturationRow pairing_ratio(const PairingExtremizer& ext);

/// k0 = round(sqrt(n)), clamped to [1, n].
std::size_t default_k0(std::size_t n) noexcept;

struct SweepOptions {
    /// Overrides default_k0 for the `pairing` family when set.
    std::optional<std::size_t> fixed_k0;
};

/// One row per (n, family) in input order. pairing-best scans k0 = 1, 2, 4, ...
/// up to n (plus n itself) and keeps the largest ratio.
std::vector<SaturationRow> saturation_sweep(const HolderExponents& e, std::span<const std::size_t> sizes,
                                            std::span<const Family> families, const SweepOptions& options = {});

/// Default sweep sizes 2^6 .. 2^20.
std::vector<std::size_t> default_sweep_sizes();

/// Best classical ratio over `trials` Ginibre pairs of size dim and `trials`
/// randomly paired diagonal operators (power_diagonal spectra). Trial i uses
/// derive_seed(seed, 3i), derive_seed(seed, 3i+1) for the Ginibre factors and
/// derive_seed(seed, 3i+2) for the pairing.
SaturationRow random_ratio_search(const HolderExponents& e, std::size_t dim, std::size_t trials, RandomSeed seed);

} // namespace wschatten
