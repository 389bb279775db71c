#pragma once

#include "polyvar/rational.hpp"

namespace polyvar {

/// Upper rational approximation of x^(1/k): u >= x^(1/k) with relative slack
/// at most 2^-64. Outward rounding keeps every asserted inequality sound (a
/// bound can only get looser).
Rational upper_kth_root(const Rational& x, unsigned k);

/// Upper rational approximation of x^(num/den), x >= 0, den >= 1. Exact when
/// den == 1. Negative num inverts a *lower* root approximation so the result
/// stays an upper bound.
Rational upper_pow(const Rational& x, long num, long den);

/// Lower counterpart (floor root), used when a factor appears inverted.
Rational lower_kth_root(const Rational& x, unsigned k);

/// Lower rational approximation of x^(num/den), num >= 0; divides an upper
/// bound when a power sits in a denominator.
Rational lower_pow(const Rational& x, long num, long den);

}  // namespace polyvar
