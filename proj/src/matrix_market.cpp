#include "xpower/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "xpower/errors.hpp"

namespace xpower {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n\f\v") == std::string::npos;
}

void strip_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next line that is neither blank nor a '%' comment; false at EOF.
    bool next_data_line(std::string& out) {
        std::string s;
        while (std::getline(in, s)) {
            ++line_no;
            strip_cr(s);
            if (blank(s) || s[s.find_first_not_of(" \t")] == '%') continue;
            out = s;
            return true;
        }
        return false;
    }
};

[[noreturn]] void fail_parse(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

long long parse_int(const std::string& tok, int line_no, const char* what) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    long long v = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0') {
        fail_parse(line_no, std::string("expected an integer ") + what + ", got '" + tok + "'");
    }
    return v;
}

double parse_real(const std::string& tok, int line_no) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        fail_parse(line_no, "non-numeric value '" + tok + "'");
    }
    return v;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

} // namespace

MatrixHandle read_matrix_market(std::istream& in) {
    LineReader reader{in};

    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError("line 1: empty input, expected a MatrixMarket header");
    }
    strip_cr(header);
    reader.line_no = 1;
    auto head_toks = tokens_of(header);
    if (head_toks.empty() || lower(head_toks[0]) != "%%matrixmarket") {
        fail_parse(1, "first line must begin with %%MatrixMarket");
    }
    if (head_toks.size() < 5) {
        fail_parse(1, "header must name object, format, field and symmetry");
    }
    const std::string object = lower(head_toks[1]);
    const std::string format = lower(head_toks[2]);
    const std::string field = lower(head_toks[3]);
    const std::string symmetry = lower(head_toks[4]);

    if (object != "matrix") {
        throw UnsupportedFormatError("unsupported object '" + head_toks[1] + "'");
    }
    if (format != "coordinate" && format != "array") {
        throw UnsupportedFormatError("unsupported format '" + head_toks[2] + "'");
    }
    if (field != "real") {
        throw UnsupportedFormatError("unsupported field '" + head_toks[3] + "'");
    }
    const bool symmetric = (symmetry == "symmetric");
    if (format == "coordinate") {
        if (!symmetric && symmetry != "general") {
            throw UnsupportedFormatError("unsupported symmetry '" + head_toks[4] + "'");
        }
    } else if (symmetry != "general") {
        throw UnsupportedFormatError("unsupported symmetry '" + head_toks[4] +
                                     "' for array format");
    }

    std::string line;
    if (!reader.next_data_line(line)) {
        fail_parse(reader.line_no + 1, "missing size line");
    }
    auto size_toks = tokens_of(line);
    const std::size_t expected_size_fields = (format == "coordinate") ? 3 : 2;
    if (size_toks.size() != expected_size_fields) {
        fail_parse(reader.line_no, "size line must hold " +
                                       std::to_string(expected_size_fields) + " integers");
    }
    long long rows = parse_int(size_toks[0], reader.line_no, "row count");
    long long cols = parse_int(size_toks[1], reader.line_no, "column count");
    if (rows <= 0 || cols <= 0) {
        fail_parse(reader.line_no, "matrix dimensions must be positive");
    }
    if (rows != cols) {
        throw UnsupportedFormatError("non-square matrix (" + std::to_string(rows) + " x " +
                                     std::to_string(cols) + ") is not supported");
    }
    const int n = static_cast<int>(rows);

    if (format == "coordinate") {
        long long nnz = parse_int(size_toks[2], reader.line_no, "entry count");
        if (nnz < 0) fail_parse(reader.line_no, "entry count must be nonnegative");

        std::vector<std::tuple<int, int, double>> triplets;
        triplets.reserve(static_cast<std::size_t>(symmetric ? 2 * nnz : nnz));
        for (long long e = 0; e < nnz; ++e) {
            if (!reader.next_data_line(line)) {
                fail_parse(reader.line_no + 1,
                           "expected " + std::to_string(nnz) + " entries, found " +
                               std::to_string(e));
            }
            auto toks = tokens_of(line);
            if (toks.size() != 3) {
                fail_parse(reader.line_no, "coordinate entry must be 'row col value'");
            }
            long long i = parse_int(toks[0], reader.line_no, "row index");
            long long j = parse_int(toks[1], reader.line_no, "column index");
            if (i < 1 || i > rows || j < 1 || j > cols) {
                fail_parse(reader.line_no,
                           "entry index (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") out of bounds for " + std::to_string(rows) + " x " +
                               std::to_string(cols) + " matrix");
            }
            double v = parse_real(toks[2], reader.line_no);
            triplets.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1), v);
            if (symmetric && i != j) {
                triplets.emplace_back(static_cast<int>(j - 1), static_cast<int>(i - 1), v);
            }
        }
        if (reader.next_data_line(line)) {
            fail_parse(reader.line_no, "unexpected content after the declared entries");
        }

        // Stable sort so duplicate coordinates are summed in file order.
        std::stable_sort(triplets.begin(), triplets.end(),
                         [](const auto& a, const auto& b) {
                             if (std::get<0>(a) != std::get<0>(b))
                                 return std::get<0>(a) < std::get<0>(b);
                             return std::get<1>(a) < std::get<1>(b);
                         });

        CsrMatrix c;
        c.n_rows = c.n_cols = n;
        c.row_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
        std::size_t idx = 0;
        for (int row = 0; row < n; ++row) {
            while (idx < triplets.size() && std::get<0>(triplets[idx]) == row) {
                int col = std::get<1>(triplets[idx]);
                double sum = std::get<2>(triplets[idx]);
                ++idx;
                while (idx < triplets.size() && std::get<0>(triplets[idx]) == row &&
                       std::get<1>(triplets[idx]) == col) {
                    sum += std::get<2>(triplets[idx]);
                    ++idx;
                }
                c.col_indices.push_back(col);
                c.values.push_back(sum);
            }
            c.row_offsets[row + 1] = static_cast<int>(c.col_indices.size());
        }
        return make_handle(std::move(c), "matrix_market");
    }

    // Array format: one value per position, column-major.
    DenseMatrix d = make_dense(n, n);
    const long long total = rows * cols;
    long long filled = 0;
    while (filled < total) {
        if (!reader.next_data_line(line)) {
            fail_parse(reader.line_no + 1,
                       "expected " + std::to_string(total) + " values, found " +
                           std::to_string(filled));
        }
        for (const auto& tok : tokens_of(line)) {
            if (filled >= total) {
                fail_parse(reader.line_no, "unexpected content after the declared values");
            }
            double v = parse_real(tok, reader.line_no);
            int col = static_cast<int>(filled / rows);
            int row = static_cast<int>(filled % rows);
            d.at(row, col) = v;
            ++filled;
        }
    }
    if (reader.next_data_line(line)) {
        fail_parse(reader.line_no, "unexpected content after the declared values");
    }
    return make_handle(std::move(d), "matrix_market");
}

MatrixHandle read_matrix_market_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw IoError("cannot open matrix file: " + path);
    }
    return read_matrix_market(f);
}

} // namespace xpower
