#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "stpq/matrix.hpp"

namespace stpq::cli {

enum class Format { text, structured };

/// A matrix together with where it came from, for error reporting.
struct MatrixDocument {
  std::string source;
  Matrix parsed;
};

/// TEXT format: rows separated by newlines or ';', entries separated by
/// whitespace; each entry an integer, fraction, or exact decimal. Throws
/// ParseError with 1-based line/column on malformed input, ragged rows,
/// zero denominators, or empty input.
Matrix parse_matrix_text(std::string_view text);

/// STRUCTURED format: a JSON object {"rows": m, "cols": n, "data": [...]},
/// data being an array of rows whose entries are strings in the same
/// scalar grammar as the text format.
Matrix parse_matrix_structured(const std::string& text);

Matrix parse_matrix(const std::string& text, Format format);

/// Resolves a command-line matrix argument: inline literal by default,
/// "@path" reads the file, "@-" reads standard input. Parse errors are
/// rethrown with the source name prefixed.
MatrixDocument load_matrix(const std::string& arg, Format format);

/// Column-aligned rows of exact entries; reparses to the identical matrix.
std::string format_matrix_text(const Matrix& a);

nlohmann::json matrix_to_json(const Matrix& a);

} // namespace stpq::cli
