#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "oracles.hpp"

using namespace wschatten;
using oracle::rel_diff;

TEST(SingularValues, DiagonalAbsoluteValuesSorted) {
    const double v[] = {3.0, -1.0, 2.0};
    EXPECT_EQ(singular_values(diagonal_matrix(v)), SingularSpectrum({3.0, 2.0, 1.0}));
}

TEST(SingularValues, UnitaryGivesOnes) {
    for (double s : singular_values(random_unitary(12, RandomSeed{2})).values()) EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(SingularValues, Matches2x2ClosedForm) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ComplexMatrix a = random_ginibre(2, RandomSeed{seed});
        const auto want = oracle::singular_values_2x2(a);
        const SingularSpectrum got = singular_values(a);
        ASSERT_EQ(got.size(), 2u);
        EXPECT_LE(rel_diff(got[0], want[0]), 1e-12) << seed;
        EXPECT_LE(rel_diff(got[1], want[1]), 1e-12) << seed;
    }
}

TEST(SingularValues, RectangularLengthIsMinDimension) {
    const ComplexMatrix tall = multiply(random_ginibre(5, RandomSeed{1}), ComplexMatrix(5, 3, std::vector<Complex>(15, 1.0)));
    EXPECT_EQ(singular_values(tall).size(), 3u);
    EXPECT_EQ(singular_values(adjoint(tall)).size(), 3u);
    // Rank one: all-ones 5x3 has sigma = sqrt(15).
    const SingularSpectrum ones = singular_values(ComplexMatrix(5, 3, std::vector<Complex>(15, 1.0)));
    EXPECT_NEAR(ones[0], std::sqrt(15.0), 1e-13);
    EXPECT_LE(ones[1], 1e-15);
    EXPECT_LE(ones[2], 1e-15);
}

TEST(SingularValues, RankDeficientHasZeros) {
    ComplexMatrix a(3, 3);
    a(0, 0) = Complex(1, 1);
    a(1, 0) = Complex(2, 0);
    EXPECT_NEAR(singular_values(a)[0], std::sqrt(6.0), 1e-14);
    EXPECT_EQ(singular_values(a)[1], 0.0);
}

TEST(SingularValues, NonFiniteRejected) {
    ComplexMatrix a(2, 2);
    a(1, 1) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    EXPECT_THROW(singular_values(a), InvalidInput);
}

TEST(SingularValues, ZeroMatrix) {
    EXPECT_EQ(singular_values(ComplexMatrix(3, 3)), SingularSpectrum({0.0, 0.0, 0.0}));
}

TEST(SingularValuesProperties, UnitaryInvariance) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 2 + seed % 31;
        const ComplexMatrix a = random_ginibre(n, RandomSeed{seed});
        const ComplexMatrix u = random_unitary(n, RandomSeed{seed + 1000});
        const ComplexMatrix v = random_unitary(n, RandomSeed{seed + 2000});
        const SingularSpectrum s0 = singular_values(a);
        const SingularSpectrum s1 = singular_values(multiply(multiply(u, a), v));
        for (std::size_t k = 0; k < n; ++k) EXPECT_LE(rel_diff(s0[k], s1[k]), 1e-10) << seed << " k=" << k;
    }
}

TEST(SingularValuesProperties, Scaling) {
    const Complex c(-1.5, 2.0);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const ComplexMatrix a = random_ginibre(8, RandomSeed{seed});
        const SingularSpectrum s0 = singular_values(a);
        const SingularSpectrum s1 = singular_values(a.scaled(c));
        for (std::size_t k = 0; k < 8; ++k) EXPECT_LE(rel_diff(std::abs(c) * s0[k], s1[k]), 1e-12);
    }
}

TEST(SingularValuesProperties, FrobeniusReconstruction) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const ComplexMatrix a = random_ginibre(1 + seed % 32, RandomSeed{seed});
        double sum = 0.0;
        for (double s : singular_values(a).values()) sum += s * s;
        EXPECT_LE(rel_diff(sum, a.frobenius_norm_sq()), 1e-10);
    }
}

TEST(SingularValuesProperties, AdjointSymmetry) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        // Rectangular: product of a 6x6 with a 6x4 block.
        const ComplexMatrix g = random_ginibre(6, RandomSeed{seed});
        std::vector<Complex> block(g.entries().begin(), g.entries().begin() + 24);
        const ComplexMatrix a(4, 6, block);
        const SingularSpectrum s0 = singular_values(a);
        const SingularSpectrum s1 = singular_values(adjoint(a));
        ASSERT_EQ(s0.size(), s1.size());
        for (std::size_t k = 0; k < s0.size(); ++k) EXPECT_LE(std::abs(s0[k] - s1[k]), 1e-12 * s0[0]);
    }
}

TEST(SingularValues, LargeDimensionAccuracy) {
    // sigma(D U) for unitary U equals |D| sorted, at a size where rounding accumulates.
    constexpr std::size_t n = 128;
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = 1.0 + static_cast<double>((i * 37) % n) / 8.0;
    const SingularSpectrum got = singular_values(multiply(diagonal_matrix(d), random_unitary(n, RandomSeed{3})));
    std::sort(d.begin(), d.end(), std::greater<>());
    for (std::size_t k = 0; k < n; ++k) EXPECT_LE(rel_diff(got[k], d[k]), 1e-12) << k;
}
