#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "twoloop/errors.hpp"
#include "twoloop/io.hpp"

using namespace twoloop;

namespace {

ParseError parse_failure(const char* text) {
  try {
    parse_matrix_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError(0, 0, "unreachable");
}

}  // namespace

TEST_CASE("matrix files") {
  const MatrixFile m = parse_matrix_file("# a 2x2 example\n2\n1; t\n\nt^-1; -1\n");
  const LaurentPoly t = LaurentPoly::t(1);
  CHECK(m.matrix == LaurentMatrix{{1, t}, {involute(t), -1}});
  CHECK(m.denominator == LaurentPoly(1));

  const MatrixFile d = parse_matrix_file("1\n2t - 1/2\ndenominator t^-1 - 3 + t\n");
  CHECK(d.matrix(0, 0) == parse_laurent("2t - 1/2"));
  CHECK(d.denominator == parse_laurent("t^-1 - 3 + t"));

  CHECK(format_matrix_file(m) == "2\n1; t\nt^-1; -1\n");
  CHECK(format_matrix_file(d) == "1\n-1/2 + 2*t\ndenominator t^-1 - 3 + t\n");
  CHECK(parse_matrix_file(format_matrix_file(d)).matrix == d.matrix);
  CHECK(parse_matrix_file(format_matrix_file(d)).denominator == d.denominator);
}

TEST_CASE("matrix file errors report line and column") {
  ParseError e = parse_failure("");
  CHECK(e.line() == 1);

  e = parse_failure("0\n");
  CHECK(e.line() == 1);
  CHECK(e.column() == 1);

  e = parse_failure("2 x\n");
  CHECK(e.line() == 1);
  CHECK(e.column() == 3);

  e = parse_failure("2\n1; 0\n0\n");
  CHECK(e.line() == 3);

  e = parse_failure("2\n1; 0\n0; 1\n1; 1\n");
  CHECK(e.line() == 4);

  e = parse_failure("2\n1; 0\n0; t^\n");
  CHECK(e.line() == 3);
  CHECK(e.column() > 4);

  e = parse_failure("1\n1\ndenominator 0\n");
  CHECK(e.line() == 3);

  e = parse_failure("1\ndenominator t\n1\n");
  CHECK(e.line() == 3);

  e = parse_failure("1\n1\ndenominator 1\ndenominator 1\n");
  CHECK(e.line() == 4);

  e = parse_failure("2\n1; 0\n");
  CHECK(e.line() == 3);
}

TEST_CASE("reading files") {
  const std::string path = "test_io_matrix.txt";
  {
    std::ofstream out(path);
    out << "1\n-1\n";
  }
  CHECK(read_text_file(path) == "1\n-1\n");
  CHECK(parse_matrix_file(read_text_file(path)).matrix == LaurentMatrix{{-1}});
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file("/nonexistent/dir/file.txt"), DomainError);
}
