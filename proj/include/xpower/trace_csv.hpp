#pragma once

#include <iosfwd>
#include <string>

#include "xpower/solvers.hpp"

namespace xpower {

// Writes `k,method,lambda,residual_norm,gamma,p,h` followed by one row per
// trace step. Reals are rendered with 17 significant digits so parsing the
// file recovers every double bit-exactly; lines end with LF. An empty trace
// produces the header only. Raises IoError if the sink fails.
void write_trace_csv(const IterationTrace& trace, const std::string& method,
                     std::ostream& sink);

} // namespace xpower
