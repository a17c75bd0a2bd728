#pragma once

#include <stdexcept>
#include <string>

namespace xpower {

// Usage errors (bad arguments, dimension mismatches, violated preconditions)
// are reported as std::invalid_argument. The types below classify failures
// that can occur on well-formed calls.

// Input data in an understood container but with an unsupported variant
// (e.g. a complex-valued matrix file).
class UnsupportedFormatError : public std::runtime_error {
public:
    explicit UnsupportedFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data; the message names the offending line where known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A factorization or solve hit an (numerically) exactly singular matrix.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

// An iteration lost its working state (e.g. the iterate was annihilated).
class BreakdownError : public std::runtime_error {
public:
    explicit BreakdownError(const std::string& msg) : std::runtime_error(msg) {}
};

// A spectrum-dependent operation met a spectrum it cannot resolve
// (tied dominant magnitudes, zero dominant eigenvalue).
class DegenerateSpectrumError : public std::runtime_error {
public:
    explicit DegenerateSpectrumError(const std::string& msg) : std::runtime_error(msg) {}
};

// Stream or file I/O failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace xpower
