#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "wschatten/complex_matrix.hpp"
#include "wschatten/spectrum.hpp"

namespace wschatten {

/// Parses {"rows": n, "cols": m, "data": [[re, im], ...]} (row-major).
/// Errors are InvalidInput naming the offending field or data index.
ComplexMatrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const ComplexMatrix& a);

/// Parses a JSON array of non-negative, non-increasing numbers.
SingularSpectrum parse_spectrum_json(std::string_view text);
std::string spectrum_to_json(const SingularSpectrum& s);

using OperatorInput = std::variant<ComplexMatrix, SingularSpectrum>;

/// Object -> matrix, array -> spectrum.
OperatorInput parse_operator_json(std::string_view text);

/// Reads a whole file; throws InvalidInput if it cannot be opened.
std::string read_text_file(const std::string& path);

} // namespace wschatten
