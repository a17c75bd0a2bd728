#include "xpower/vec.hpp"

#include <cmath>
#include <stdexcept>

namespace xpower {

double dot(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("dot: vector lengths differ");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * y[i];
    }
    return s;
}

double norm(const Vector& x) {
    return std::sqrt(dot(x, x));
}

Vector lincomb(double a, const Vector& x, double b, const Vector& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("lincomb: vector lengths differ");
    }
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = a * x[i] + b * y[i];
    }
    return z;
}

} // namespace xpower
