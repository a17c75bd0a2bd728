#pragma once

#include <vector>

namespace xpower {

using Vector = std::vector<double>;

// Sum of componentwise products, accumulated left to right in index order.
// The fixed accumulation order keeps every solve bit-reproducible.
double dot(const Vector& x, const Vector& y);

// Euclidean norm, sqrt(dot(x, x)).
double norm(const Vector& x);

// a*x + b*y, componentwise.
Vector lincomb(double a, const Vector& x, double b, const Vector& y);

} // namespace xpower
