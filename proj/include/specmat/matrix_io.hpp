#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "specmat/complex_matrix.hpp"
#include "specmat/error.hpp"
#include "specmat/synthesis.hpp"

namespace specmat {

/// Malformed matrix document. The message names the offending row or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses {"n": n, "entries": [[[re, im], ...], ...]}.
Matrix parse_matrix_document(std::string_view text);
Matrix read_matrix_file(const std::string& path);

/// Decimal literal with 17 significant digits; parses back to the same double.
std::string format_real(double x);

/// What an eval run puts in its output document. Absent parts are omitted.
struct ResultDocument {
  std::size_t n = 0;
  std::optional<Matrix> matrix;
  std::optional<CoefficientVector> coefficients;
  std::optional<ClusteredSpectrum> eigenvalues;
  std::optional<SynthesisPath> path;
  std::optional<double> residual_max;
  std::optional<double> disagreement;
};

std::string write_result_document(const ResultDocument& doc);
/// A bare matrix in the input format.
std::string write_matrix_document(const Matrix& m);

}  // namespace specmat
