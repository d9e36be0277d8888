#include "wschatten/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "wschatten/errors.hpp"

namespace wschatten {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
    const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(prod >> 32);
    lo = static_cast<std::uint32_t>(prod);
}

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) noexcept {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
        mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

PhiloxStream::PhiloxStream(RandomSeed seed, std::uint32_t stream) noexcept
    : key_{static_cast<std::uint32_t>(seed.value), static_cast<std::uint32_t>(seed.value >> 32)},
      stream_(stream) {}

void PhiloxStream::refill() noexcept {
    const Philox4x32::Counter ctr{static_cast<std::uint32_t>(block_index_),
                                  static_cast<std::uint32_t>(block_index_ >> 32), stream_, 0u};
    buffer_ = Philox4x32::block(ctr, key_);
    ++block_index_;
    buffered_ = 4;
}

std::uint32_t PhiloxStream::next_u32() noexcept {
    if (buffered_ == 0) refill();
    return buffer_[4 - buffered_--];
}

std::uint64_t PhiloxStream::next_u64() noexcept {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double PhiloxStream::next_uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double PhiloxStream::next_normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    const double u1 = 1.0 - next_uniform(); // (0, 1]
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t PhiloxStream::next_below(std::uint64_t bound) noexcept {
    // Reject the lowest (2^64 mod bound) draws so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x = next_u64();
    while (x < threshold) x = next_u64();
    return x % bound;
}

RandomSeed derive_seed(RandomSeed base, std::uint64_t index) noexcept {
    return RandomSeed{splitmix64_mix(splitmix64_mix(base.value) + 0x9E3779B97F4A7C15ull * (index + 1))};
}

ComplexMatrix random_ginibre(std::size_t n, RandomSeed seed) {
    if (n == 0) throw InvalidInput("n must be >= 1");
    PhiloxStream rng(seed);
    const double scale = std::numbers::sqrt2 / 2.0;
    std::vector<Complex> entries(n * n);
    for (auto& z : entries) {
        const double re = rng.next_normal();
        const double im = rng.next_normal();
        z = Complex(re * scale, im * scale);
    }
    return ComplexMatrix(n, n, std::move(entries));
}

ComplexMatrix random_unitary(std::size_t n, RandomSeed seed) {
    const ComplexMatrix g = random_ginibre(n, seed);
    // Column-major working copy.
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cols[j][i] = g(i, j);

    for (std::size_t j = 0; j < n; ++j) {
        auto& v = cols[j];
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                const auto& u = cols[k];
                Complex dot{};
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(u[i]) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
            }
        }
        double norm_sq = 0.0;
        for (const auto& z : v) norm_sq += std::norm(z);
        const double norm = std::sqrt(norm_sq);
        if (!(norm > 0.0)) throw NumericFailure("random_unitary: rank-deficient Ginibre draw");
        for (auto& z : v) z /= norm;
    }

    ComplexMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u(i, j) = cols[j][i];
    return u;
}

Permutation random_permutation(std::size_t n, RandomSeed seed) {
    PhiloxStream rng(seed, 1);
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(image[i - 1], image[j]);
    }
    return Permutation(std::move(image));
}

} // namespace wschatten
