#pragma once

// Matrix files: JSON {"n": N, "entries": [[[re, im], ...], ...]} (row-major),
// or plain text with one row per line of tokens like 1, -i, 0.5+0.25i, 1e-3-2i.

#include <string>

#include "hadsub/hadamard.hpp"

namespace hadsub {

/// Malformed file contents; the message carries line and column.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

Matrix parse_matrix_text(const std::string& contents);
Matrix read_matrix_file(const std::string& path);

/// Parses and verifies. Throws ParseError / InputError for unreadable input;
/// a verification failure is reported through the returned check.
HadamardCheck parse_matrix_file(const std::string& path, double tol = kDefaultTol);

/// Deterministic JSON text (shortest round-trip doubles), newline terminated.
std::string matrix_to_json(const Matrix& m);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace hadsub
