#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wschatten {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Always at least 1x1, all entries finite.
class ComplexMatrix {
public:
    /// Zero matrix of the given shape.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Takes ownership of row-major entries; throws InvalidInput on a shape
    /// mismatch, a zero dimension or a non-finite component.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    /// Squared Frobenius norm.
    double frobenius_norm_sq() const noexcept;

    ComplexMatrix scaled(Complex c) const;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

/// Bijection on {0, ..., n-1}. Construction validates bijectivity.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return image_.size(); }
    std::size_t operator[](std::size_t i) const noexcept { return image_[i]; }
    std::span<const std::size_t> image() const noexcept { return image_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> image_;
};

/// Standard matrix product; throws InvalidInput when a.cols() != b.rows().
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Square matrix with `values` on the diagonal. Empty input is rejected.
ComplexMatrix diagonal_matrix(std::span<const double> values);

/// 0/1 matrix P with P(i, perm[i]) = 1, so (D_T P D_S)(i, perm[i]) = t_i s_perm[i].
ComplexMatrix permutation_matrix(const Permutation& perm);

} // namespace wschatten
