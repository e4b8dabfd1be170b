#include "twoloop/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "twoloop/errors.hpp"

namespace twoloop {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<LaurentPoly> entries;
  MatrixFile out;
  bool have_denominator = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    const auto first = line.find_first_not_of(" \t\r");
    if (n < 0) {
      std::istringstream fields(line);
      std::string extra;
      if (!(fields >> n) || n < 1 || n > 64)
        throw ParseError(lineno, static_cast<int>(first) + 1, "expected the matrix size (1..64)");
      if (fields >> extra) throw ParseError(lineno, static_cast<int>(line.find(extra)) + 1, "trailing input");
      continue;
    }
    constexpr std::string_view kDen = "denominator";
    if (std::string_view(line).substr(first, kDen.size()) == kDen) {
      if (have_denominator) throw ParseError(lineno, static_cast<int>(first) + 1, "duplicate denominator");
      const std::size_t at = first + kDen.size();
      out.denominator = parse_laurent(std::string_view(line).substr(at), lineno, static_cast<int>(at));
      if (out.denominator.is_zero()) throw ParseError(lineno, static_cast<int>(at) + 1, "zero denominator");
      have_denominator = true;
      continue;
    }
    if (have_denominator) throw ParseError(lineno, static_cast<int>(first) + 1, "rows must precede the denominator");
    if (entries.size() == static_cast<std::size_t>(n * n))
      throw ParseError(lineno, static_cast<int>(first) + 1, "more than n rows");
    std::size_t start = 0;
    long long count = 0;
    while (true) {
      const std::size_t semi = line.find(';', start);
      const std::size_t end = semi == std::string::npos ? line.size() : semi;
      entries.push_back(parse_laurent(std::string_view(line).substr(start, end - start), lineno,
                                      static_cast<int>(start)));
      ++count;
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    if (count != n)
      throw ParseError(lineno, 1, "expected " + std::to_string(n) + " entries, got " + std::to_string(count));
  }
  if (n < 0) throw ParseError(lineno + 1, 1, "missing matrix size");
  if (entries.size() != static_cast<std::size_t>(n * n))
    throw ParseError(lineno + 1, 1, "expected " + std::to_string(n) + " rows");
  out.matrix = LaurentMatrix(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
      out.matrix(i, j) = entries[i * static_cast<std::size_t>(n) + j];
  return out;
}

std::string format_matrix_file(const MatrixFile& m) {
  std::string out = std::to_string(m.matrix.size()) + "\n";
  for (std::size_t i = 0; i < m.matrix.size(); ++i) {
    for (std::size_t j = 0; j < m.matrix.size(); ++j) {
      if (j) out += "; ";
      out += to_string(m.matrix(i, j));
    }
    out += "\n";
  }
  if (m.denominator != LaurentPoly(1)) out += "denominator " + to_string(m.denominator) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace twoloop
