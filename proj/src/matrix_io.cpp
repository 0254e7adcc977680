#include "hadsub/matrix_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hadsub {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

using nlohmann::json;

void line_col(const std::string& text, std::size_t offset, std::size_t& line, std::size_t& col) {
  line = 1;
  col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

Matrix parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line, col;
    line_col(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
    throw ParseError("invalid JSON", line, col);
  }
  const auto fail = [](const std::string& what) { throw ParseError(what, 1, 1); };
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) fail("expected object with \"n\" and \"entries\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) fail("\"n\" must be a positive integer");
  const auto n = doc["n"].get<Eigen::Index>();
  const json& rows = doc["entries"];
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) fail("\"entries\" must hold n rows");
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      fail("row " + std::to_string(i + 1) + " must hold n entries");
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& z = row[static_cast<std::size_t>(j)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") must be [re, im]");
      m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

/// One token: a real part, an imaginary part, or both ("a+bi").
Complex parse_token(const std::string& tok, std::size_t line, std::size_t col) {
  const char* s = tok.c_str();
  const char* end = s + tok.size();
  const auto bad = [&] { throw ParseError("cannot parse complex number '" + tok + "'", line, col); };

  // bare imaginary unit: "i", "+i", "-i"
  const auto unit_imag = [&](const char* p) -> std::optional<double> {
    if ((*p == '+' || *p == '-') && p + 2 == end && p[1] == 'i') return *p == '-' ? -1.0 : 1.0;
    if (p + 1 == end && *p == 'i') return 1.0;
    return std::nullopt;
  };
  if (auto v = unit_imag(s)) return Complex(0.0, *v);

  char* next = nullptr;
  const double first = std::strtod(s, &next);
  if (next == s) bad();
  if (next == end) return Complex(first, 0.0);
  if (*next == 'i' && next + 1 == end) return Complex(0.0, first);
  if (*next != '+' && *next != '-') bad();
  if (auto v = unit_imag(next)) return Complex(first, *v);
  const char* imag_start = next;
  const double second = std::strtod(imag_start, &next);
  if (next == imag_start || next + 1 != end || *next != 'i') bad();
  return Complex(first, second);
}

Matrix parse_plain(const std::string& text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Complex> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      const std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      row.push_back(parse_token(line.substr(start, pos - start), lineno, start + 1));
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size())
        throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()),
                         lineno, 1);
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw ParseError("no matrix rows found", 1, 1);
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (static_cast<Eigen::Index>(rows.front().size()) != n)
    throw ParseError("matrix is not square (" + std::to_string(n) + " rows, " + std::to_string(rows.front().size()) +
                         " columns)",
                     1, 1);
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

Matrix parse_matrix_text(const std::string& contents) {
  const auto first = contents.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && contents[first] == '{') return parse_json(contents);
  return parse_plain(contents);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

HadamardCheck parse_matrix_file(const std::string& path, double tol) {
  return verify_hadamard(read_matrix_file(path), tol);
}

std::string matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json doc;
  doc["n"] = m.rows();
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc.dump() + "\n";
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
}

}  // namespace hadsub
