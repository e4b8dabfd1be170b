#pragma once

#include <string>
#include <string_view>

#include "twoloop/laurent.hpp"

namespace twoloop {

/// Matrix text form: the size n on the first line, then n rows of n
/// Laurent polynomials separated by `;`. An optional trailing line
/// `denominator <poly>` declares a common denominator for all entries.
/// Blank lines and `#` comments are ignored.
struct MatrixFile {
  LaurentMatrix matrix;
  LaurentPoly denominator{1};
};

MatrixFile parse_matrix_file(std::string_view text);
std::string format_matrix_file(const MatrixFile& m);

/// Whole file as a string; throws DomainError if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace twoloop
