#include "xpower/trace_csv.hpp"

#include <cstdio>
#include <ostream>

#include "xpower/errors.hpp"

namespace xpower {

void write_trace_csv(const IterationTrace& trace, const std::string& method,
                     std::ostream& sink) {
    sink << "k,method,lambda,residual_norm,gamma,p,h\n";
    char buf[512];
    for (const TraceStep& s : trace) {
        std::snprintf(buf, sizeof buf, "%d,%s,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      s.k, method.c_str(), s.lambda, s.residual_norm, s.gamma,
                      s.p, s.h);
        sink << buf;
    }
    sink.flush();
    if (!sink) {
        throw IoError("trace write failed");
    }
}

} // namespace xpower
