#include "wschatten/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "wschatten/errors.hpp"

namespace wschatten {

namespace {

void require_positive_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0) throw InvalidInput("rows must be >= 1");
    if (cols == 0) throw InvalidInput("cols must be >= 1");
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    require_positive_shape(rows, cols);
    data_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require_positive_shape(rows, cols);
    if (data_.size() != rows * cols) {
        throw InvalidInput("entries length " + std::to_string(data_.size()) + " != rows*cols = " +
                           std::to_string(rows * cols));
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!std::isfinite(data_[i].real()) || !std::isfinite(data_[i].imag())) {
            throw InvalidInput("non-finite entry at index " + std::to_string(i));
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double ComplexMatrix::frobenius_norm_sq() const noexcept {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return s;
}

ComplexMatrix ComplexMatrix::scaled(Complex c) const {
    std::vector<Complex> out(data_);
    for (auto& z : out) z *= c;
    return ComplexMatrix(rows_, cols_, std::move(out));
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        const std::size_t j = image_[i];
        if (j >= image_.size()) {
            throw InvalidInput("not a bijection: image[" + std::to_string(i) + "] = " + std::to_string(j) +
                               " is out of range");
        }
        if (seen[j]) {
            throw InvalidInput("not a bijection: value " + std::to_string(j) + " repeated at index " +
                               std::to_string(i));
        }
        seen[j] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    return Permutation(std::move(image));
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw InvalidInput("dimension mismatch: (" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                           ") * (" + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
    }
    ComplexMatrix c(a.rows(), b.cols());
    // i-k-j order keeps the inner loop contiguous in both b and c.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix h(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) h(j, i) = std::conj(a(i, j));
    return h;
}

ComplexMatrix diagonal_matrix(std::span<const double> values) {
    if (values.empty()) throw InvalidInput("rows must be >= 1: empty diagonal");
    std::vector<Complex> entries(values.size() * values.size());
    for (std::size_t i = 0; i < values.size(); ++i) entries[i * values.size() + i] = values[i];
    return ComplexMatrix(values.size(), values.size(), std::move(entries));
}

ComplexMatrix permutation_matrix(const Permutation& perm) {
    if (perm.size() == 0) throw InvalidInput("rows must be >= 1: empty permutation");
    ComplexMatrix m(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m(i, perm[i]) = 1.0;
    return m;
}

} // namespace wschatten
