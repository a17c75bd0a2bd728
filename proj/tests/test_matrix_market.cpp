#include <cstdio>
#include <sstream>
#include <string>

#include "doctest.h"
#include "xpower/errors.hpp"
#include "xpower/generators.hpp"
#include "xpower/matrix.hpp"
#include "xpower/matrix_market.hpp"
#include "xpower/vec.hpp"

using namespace xpower;

namespace {

MatrixHandle parse(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_market(in);
}

// Serializes a handle in coordinate/general form, for round-trip checks.
std::string to_coordinate_general(const MatrixHandle& h) {
    DenseMatrix a = to_dense(h);
    int nnz = 0;
    for (double v : a.entries)
        if (v != 0.0) ++nnz;
    char buf[64];
    std::string out = "%%MatrixMarket matrix coordinate real general\n";
    std::snprintf(buf, sizeof buf, "%d %d %d\n", a.n_rows, a.n_cols, nnz);
    out += buf;
    for (int i = 0; i < a.n_rows; ++i) {
        for (int j = 0; j < a.n_cols; ++j) {
            if (a.at(i, j) == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i + 1, j + 1,
                          a.at(i, j));
            out += buf;
        }
    }
    return out;
}

} // namespace

TEST_CASE("coordinate general: entries land at their 1-based coordinates") {
    MatrixHandle h = parse(
        "%%MatrixMarket matrix coordinate real general\n"
        "2 2 2\n"
        "1 1 2.0\n"
        "2 2 1.0\n");
    REQUIRE(h.n == 2);
    DenseMatrix a = to_dense(h);
    CHECK(a.at(0, 0) == 2.0);
    CHECK(a.at(1, 1) == 1.0);
    CHECK(a.at(0, 1) == 0.0);
    CHECK(a.at(1, 0) == 0.0);
}

TEST_CASE("coordinate symmetric: lower storage expands without doubling the diagonal") {
    MatrixHandle h = parse(
        "%%MatrixMarket matrix coordinate real symmetric\n"
        "2 2 2\n"
        "1 1 5.0\n"
        "2 1 3.0\n");
    DenseMatrix a = to_dense(h);
    CHECK(a.at(0, 0) == 5.0);
    CHECK(a.at(1, 0) == 3.0);
    CHECK(a.at(0, 1) == 3.0);
    CHECK(a.at(1, 1) == 0.0);
}

TEST_CASE("coordinate: duplicate coordinates are summed") {
    MatrixHandle h = parse(
        "%%MatrixMarket matrix coordinate real general\n"
        "2 2 3\n"
        "1 2 1.5\n"
        "1 2 2.5\n"
        "2 2 1.0\n");
    DenseMatrix a = to_dense(h);
    CHECK(a.at(0, 1) == 4.0);
    CHECK(a.at(1, 1) == 1.0);
}

TEST_CASE("comments and blank lines are tolerated between records") {
    MatrixHandle h = parse(
        "%%MatrixMarket matrix coordinate real general\n"
        "% a comment right after the header\n"
        "\n"
        "2 2 2\n"
        "% interleaved comment\n"
        "1 1 4.0\n"
        "\n"
        "2 2 9.0\n");
    DenseMatrix a = to_dense(h);
    CHECK(a.at(0, 0) == 4.0);
    CHECK(a.at(1, 1) == 9.0);
}

TEST_CASE("array general: values are stored column-major") {
    MatrixHandle h = parse(
        "%%MatrixMarket matrix array real general\n"
        "2 2\n"
        "1.0\n"
        "2.0\n"
        "3.0\n"
        "4.0\n");
    DenseMatrix a = to_dense(h);
    CHECK(a.at(0, 0) == 1.0);
    CHECK(a.at(1, 0) == 2.0);
    CHECK(a.at(0, 1) == 3.0);
    CHECK(a.at(1, 1) == 4.0);
}

TEST_CASE("unsupported qualifiers are rejected by name") {
    struct Case {
        const char* header;
        const char* token;
    };
    const Case cases[] = {
        {"%%MatrixMarket matrix coordinate complex general\n2 2 0\n", "complex"},
        {"%%MatrixMarket matrix coordinate pattern general\n2 2 0\n", "pattern"},
        {"%%MatrixMarket matrix coordinate real hermitian\n2 2 0\n", "hermitian"},
        {"%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 0\n",
         "skew-symmetric"},
        {"%%MatrixMarket matrix array real symmetric\n2 2\n1\n2\n3\n",
         "symmetric"},
        {"%%MatrixMarket vector coordinate real general\n2 2 0\n", "vector"},
    };
    for (const Case& c : cases) {
        try {
            parse(c.header);
            FAIL_CHECK("expected rejection of: " << c.header);
        } catch (const UnsupportedFormatError& e) {
            CHECK(std::string(e.what()).find(c.token) != std::string::npos);
        }
    }
}

TEST_CASE("malformed input reports the offending line") {
    // Out-of-range row index on data line 3 (header is line 1, sizes line 2).
    try {
        parse(
            "%%MatrixMarket matrix coordinate real general\n"
            "2 2 1\n"
            "3 1 1.0\n");
        FAIL_CHECK("expected a parse failure");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    // Non-numeric value.
    try {
        parse(
            "%%MatrixMarket matrix coordinate real general\n"
            "2 2 1\n"
            "1 1 twelve\n");
        FAIL_CHECK("expected a parse failure");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    // Truncated entry list.
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real general\n"
                          "2 2 2\n"
                          "1 1 1.0\n"),
                    ParseError);

    // Rectangular sizes are structurally unsupported here.
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real general\n"
                          "2 3 1\n"
                          "1 1 1.0\n"),
                    UnsupportedFormatError);

    // Missing header magic.
    CHECK_THROWS_AS(parse("% not a header\n2 2 0\n"), ParseError);
}

TEST_CASE("round trip: serialize then reparse reproduces the matrix exactly") {
    MatrixHandle originals[] = {wilkinson_w21(), clustered_diag(),
                                nonnormal_t(16.0)};
    for (const MatrixHandle& h : originals) {
        MatrixHandle back = parse(to_coordinate_general(h));
        DenseMatrix a = to_dense(h);
        DenseMatrix b = to_dense(back);
        REQUIRE(a.n_rows == b.n_rows);
        bool identical = true;
        for (std::size_t i = 0; i < a.entries.size(); ++i)
            identical = identical && (a.entries[i] == b.entries[i]);
        CHECK(identical);
    }
}

TEST_CASE("symmetric storage acts identically to the explicit mirror") {
    // Random-ish 6x6 symmetric matrix written in lower-triangular storage.
    const int n = 6;
    Vector vals = random_init(n * n, 99);
    DenseMatrix full = make_dense(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const double v = vals[static_cast<std::size_t>(i) * n + j];
            full.at(i, j) = v;
            full.at(j, i) = v;
        }

    char buf[64];
    std::string text = "%%MatrixMarket matrix coordinate real symmetric\n";
    std::snprintf(buf, sizeof buf, "%d %d %d\n", n, n, n * (n + 1) / 2);
    text += buf;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i + 1, j + 1,
                          full.at(i, j));
            text += buf;
        }

    MatrixHandle h = parse(text);
    MatrixHandle ref = make_handle(std::move(full), "mirror");
    for (int trial = 0; trial < 10; ++trial) {
        Vector x = random_init(n, 1000 + trial);
        Vector lhs = apply_handle(h, x);
        Vector rhs = apply_handle(ref, x);
        for (int i = 0; i < n; ++i)
            CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-14));
    }
}
