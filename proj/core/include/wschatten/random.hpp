#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "wschatten/complex_matrix.hpp"

namespace wschatten {

struct RandomSeed {
    std::uint64_t value = 0;
    friend bool operator==(RandomSeed, RandomSeed) = default;
};

/// Human-readable name of the generator, embedded in CLI report metadata.
inline constexpr std::string_view kPrngName =
    "philox4x32-10 (Random123); key=(seed lo32, seed hi32), counter=(block lo32, block hi32, stream, 0); "
    "uniform=53-bit; normal=Box-Muller";

/// Philox4x32 with 10 rounds (Salmon et al., Random123). Stateless: each
/// (counter, key) pair maps to one 128-bit output block.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key) noexcept;
};

/// Sequential draws from a Philox keyed stream. Block b of stream s uses
/// counter (lo32(b), hi32(b), s, 0) and key (lo32(seed), hi32(seed)).
class PhiloxStream {
public:
    explicit PhiloxStream(RandomSeed seed, std::uint32_t stream = 0) noexcept;

    std::uint32_t next_u32() noexcept;
    std::uint64_t next_u64() noexcept;
    /// Uniform on [0, 1) with 53 random bits.
    double next_uniform() noexcept;
    /// Standard normal, Box-Muller; the second variate of each pair is cached.
    double next_normal() noexcept;
    /// Uniform integer on [0, bound), bound > 0, unbiased (modulo with rejection).
    std::uint64_t next_below(std::uint64_t bound) noexcept;

private:
    void refill() noexcept;

    Philox4x32::Key key_;
    std::uint32_t stream_;
    std::uint64_t block_index_ = 0;
    Philox4x32::Counter buffer_{};
    std::size_t buffered_ = 0;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// Independent child seed for trial `index` (SplitMix64 finalizer over seed and index).
RandomSeed derive_seed(RandomSeed base, std::uint64_t index) noexcept;

/// n x n matrix of i.i.d. standard complex Gaussians (E|z|^2 = 1).
ComplexMatrix random_ginibre(std::size_t n, RandomSeed seed);

/// Haar unitary: Gram-Schmidt (two passes) on a Ginibre draw, R-diagonal real positive.
ComplexMatrix random_unitary(std::size_t n, RandomSeed seed);

/// Uniformly random bijection on {0..n-1} (Fisher-Yates).
Permutation random_permutation(std::size_t n, RandomSeed seed);

} // namespace wschatten
