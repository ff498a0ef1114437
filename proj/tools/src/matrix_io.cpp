#include "matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "stpq/error.hpp"

namespace stpq::cli {

using nlohmann::json;

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_row_separator(char c) { return c == ';' || c == '\n'; }

bool is_entry_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

Rational parse_entry(const Token& token) {
  try {
    return parse_rational(token.text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), token.line, token.column);
  }
}

} // namespace

Matrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Token> row_heads; // first token of each row, for ragged reports
  std::vector<Rational> current;
  Token head{};

  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  const auto end_row = [&] {
    if (!current.empty()) {
      rows.push_back(std::move(current));
      row_heads.push_back(head);
      current.clear();
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (is_row_separator(c)) {
      end_row();
      if (c == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    } else if (is_entry_space(c)) {
      ++column;
      ++i;
    } else {
      Token token{{}, line, column};
      while (i < text.size() && !is_row_separator(text[i]) &&
             !is_entry_space(text[i])) {
        token.text.push_back(text[i]);
        ++i;
        ++column;
      }
      if (current.empty()) {
        head = token;
      }
      current.push_back(parse_entry(token));
    }
  }
  end_row();

  if (rows.empty()) {
    throw ParseError("empty matrix input", 1, 1);
  }
  const std::size_t cols = rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ParseError("ragged rows: row " + std::to_string(r + 1) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(cols),
                       row_heads[r].line, row_heads[r].column);
    }
    std::move(rows[r].begin(), rows[r].end(), std::back_inserter(entries));
  }
  return {rows.size(), cols, std::move(entries)};
}

Matrix parse_matrix_structured(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("structured matrix must be a JSON object");
  }
  for (const char* field : {"rows", "cols", "data"}) {
    if (!doc.contains(field)) {
      throw ParseError(std::string("missing field '") + field + "'");
    }
  }
  if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned()) {
    throw ParseError("'rows' and 'cols' must be nonnegative integers");
  }
  const auto rows = doc["rows"].get<std::size_t>();
  const auto cols = doc["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) {
    throw ParseError("matrix dimensions must be positive");
  }
  const json& data = doc["data"];
  if (!data.is_array() || data.size() != rows) {
    throw ParseError("'data' must be an array of " + std::to_string(rows) +
                     " rows");
  }
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = data[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("'data' row " + std::to_string(r + 1) + " must be an array of " +
                           std::to_string(cols) + " entries",
                       r + 1, 0);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string()) {
        throw ParseError("data[" + std::to_string(r + 1) + "][" +
                             std::to_string(c + 1) + "]: entry must be a string",
                         r + 1, c + 1);
      }
      try {
        entries.push_back(parse_rational(row[c].get<std::string>()));
      } catch (const ParseError& e) {
        throw ParseError("data[" + std::to_string(r + 1) + "][" +
                             std::to_string(c + 1) + "]: " + e.what(),
                         r + 1, c + 1);
      }
    }
  }
  return {rows, cols, std::move(entries)};
}

Matrix parse_matrix(const std::string& text, Format format) {
  return format == Format::text ? parse_matrix_text(text)
                                : parse_matrix_structured(text);
}

MatrixDocument load_matrix(const std::string& arg, Format format) {
  std::string source = "(inline)";
  std::string text = arg;
  if (!arg.empty() && arg.front() == '@') {
    const std::string path = arg.substr(1);
    if (path == "-") {
      source = "(stdin)";
      std::ostringstream buffer;
      buffer << std::cin.rdbuf();
      text = buffer.str();
    } else {
      source = path;
      std::ifstream file(path, std::ios::binary);
      if (!file) {
        throw ParseError(source + ": cannot open file");
      }
      std::ostringstream buffer;
      buffer << file.rdbuf();
      text = buffer.str();
    }
  }
  try {
    return {source, parse_matrix(text, format)};
  } catch (const ParseError& e) {
    std::string where = source;
    if (e.line() > 0) {
      where += ":" + std::to_string(e.line());
      if (e.column() > 0) {
        where += ":" + std::to_string(e.column());
      }
    }
    throw ParseError(where + ": " + e.what(), e.line(), e.column());
  }
}

std::string format_matrix_text(const Matrix& a) {
  std::vector<std::string> cells(a.rows() * a.cols());
  std::vector<std::size_t> widths(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::string& cell = cells[i * a.cols() + j];
      cell = a(i, j).to_string();
      widths[j] = std::max(widths[j], cell.size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::string& cell = cells[i * a.cols() + j];
      if (j > 0) {
        out += ' ';
      }
      out.append(widths[j] - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

json matrix_to_json(const Matrix& a) {
  json data = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      row.push_back(a(i, j).to_string());
    }
    data.push_back(std::move(row));
  }
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

} // namespace stpq::cli
