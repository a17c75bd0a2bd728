#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "xpower/errors.hpp"
#include "xpower/linear_operator.hpp"
#include "xpower/matrix.hpp"
#include "xpower/solvers.hpp"
#include "xpower/trace_csv.hpp"

using namespace xpower;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("empty trace writes the header only") {
    std::ostringstream out;
    write_trace_csv({}, "power", out);
    CHECK(out.str() == "k,method,lambda,residual_norm,gamma,p,h\n");
}

TEST_CASE("rows render with unambiguous shortest-exact decimal fields") {
    // Values whose 17-significant-digit renderings are fixed: exact decimals
    // stay short, 0.1 shows its true binary value, 1e9 stays in fixed form.
    IterationTrace trace;
    trace.push_back(TraceStep{7, 0.1, 1.5, -0.5, 0.0, 1000000000.0});
    std::ostringstream out;
    write_trace_csv(trace, "simple", out);
    auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "k,method,lambda,residual_norm,gamma,p,h");
    CHECK(lines[1] == "7,simple,0.10000000000000001,1.5,-0.5,0,1000000000");
}

TEST_CASE("a rounding-free solver application produces exact integer fields") {
    // Start on the dominant axis with a power-of-two norm: every quantity in
    // the first application is exactly representable.
    DenseMatrix a = make_dense(2, 2);
    a.at(0, 0) = 2.0;
    a.at(1, 1) = 1.0;
    LinearOperator op = make_operator(make_handle(std::move(a), "diag"));
    SolverConfig cfg;
    cfg.tol = 1e-12;
    EigenResult r = power_iterate(op, {2.0, 0.0}, cfg);
    REQUIRE(r.converged);

    std::ostringstream out;
    write_trace_csv(r.trace, "power", out);
    auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "1,power,2,0,0,0,2");
}

TEST_CASE("round trip: every double is recovered bit-exactly via strtod") {
    IterationTrace trace;
    const double tricky[] = {
        0.1,
        1.0 / 3.0,
        -2.2250738585072014e-308, // smallest normal magnitude
        1.7976931348623157e308,   // largest finite
        5e-324,                   // smallest subnormal
        -123456.78901234567,
        std::sqrt(2.0),
        9.109382e-11,
        1.0000000000000002,       // one ulp above 1
    };
    int k = 1;
    for (double v : tricky) {
        TraceStep s;
        s.k = k++;
        s.lambda = v;
        s.residual_norm = std::fabs(v);
        s.gamma = -v / 3.0;
        s.p = v * 7.0;
        s.h = std::fabs(v) + 1.0;
        trace.push_back(s);
    }

    std::ostringstream out;
    write_trace_csv(trace, "augmented", out);
    auto lines = lines_of(out.str());
    REQUIRE(lines.size() == trace.size() + 1);

    for (std::size_t i = 0; i < trace.size(); ++i) {
        auto f = split_fields(lines[i + 1]);
        REQUIRE(f.size() == 7);
        CHECK(std::atoi(f[0].c_str()) == trace[i].k);
        CHECK(f[1] == "augmented");
        CHECK(std::strtod(f[2].c_str(), nullptr) == trace[i].lambda);
        CHECK(std::strtod(f[3].c_str(), nullptr) == trace[i].residual_norm);
        CHECK(std::strtod(f[4].c_str(), nullptr) == trace[i].gamma);
        CHECK(std::strtod(f[5].c_str(), nullptr) == trace[i].p);
        CHECK(std::strtod(f[6].c_str(), nullptr) == trace[i].h);
    }
}
