#pragma once

#include <iosfwd>
#include <string>

#include "xpower/matrix.hpp"

namespace xpower {

// Reads a Matrix Market stream. Supported headers:
//   %%MatrixMarket matrix coordinate real general
//   %%MatrixMarket matrix coordinate real symmetric
//   %%MatrixMarket matrix array real general
// Coordinate data (1-based indices) becomes CSR with rows sorted and
// duplicate coordinates summed; symmetric storage is expanded to both
// triangles without duplicating the diagonal. Array data (column-major)
// becomes dense. Only square matrices are accepted.
//
// Errors: UnsupportedFormatError naming the offending qualifier token
// (complex, pattern, hermitian, skew-symmetric, ...); ParseError with the
// line number for out-of-bounds indices, non-numeric values, and malformed
// structure. '%' comment lines are skipped anywhere after the header.
MatrixHandle read_matrix_market(std::istream& in);

// Same, from a file path; unreadable file raises IoError.
MatrixHandle read_matrix_market_file(const std::string& path);

} // namespace xpower
