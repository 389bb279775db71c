#include <doctest.h>

#include <cmath>

#include "polyvar/rng.hpp"
#include "polyvar/roots.hpp"

using namespace polyvar;

TEST_CASE("outward roots bound the true value from above, tightly") {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Rational x(Int(1 + rng.below(5000)), Int(1 + rng.below(40)));
        unsigned k = 2 + static_cast<unsigned>(rng.below(5));
        Rational u = upper_kth_root(x, k);
        // soundness: u^k >= x, exactly
        CHECK(u.pow(static_cast<long>(k)) >= x);
        // tightness: (u - 2^-60)^k < x, i.e. u is within the documented slack
        Rational below = u - Rational(Int(1), Int(Int(1) << 40));
        if (below.sign() > 0) CHECK(below.pow(static_cast<long>(k)) < x);
        // lower counterpart brackets from below
        Rational l = lower_kth_root(x, k);
        CHECK(l.pow(static_cast<long>(k)) <= x);
        CHECK(l <= u);
    }
}

TEST_CASE("perfect powers are hit exactly") {
    CHECK(upper_kth_root(Rational(8), 3) == Rational(2));
    CHECK(upper_kth_root(rational_of(9, 4), 2) == rational_of(3, 2));
    CHECK(lower_kth_root(Rational(32), 5) == Rational(2));
    CHECK(upper_kth_root(Rational(0), 7) == Rational(0));
}

TEST_CASE("upper_pow handles integer, fractional and negative exponents") {
    CHECK(upper_pow(Rational(3), 2, 1) == Rational(9));
    CHECK(upper_pow(Rational(4), 1, 2) == Rational(2));
    CHECK(upper_pow(Rational(4), 3, 2) == Rational(8));
    CHECK(upper_pow(Rational(2), 0, 1) == Rational(1));
    // 2^(-1/2) upper-approximated: still above the true value
    Rational u = upper_pow(Rational(2), -1, 2);
    CHECK(u.pow(2) * Rational(2) >= Rational(1));
    // double sanity
    CHECK(u.to_double() == doctest::Approx(0.70710678).epsilon(1e-6));
    CHECK_THROWS_AS(upper_pow(Rational(-1), 1, 2), DomainError);
    CHECK_THROWS_AS(upper_pow(Rational(0), -1, 1), DomainError);
}

TEST_CASE("high-precision cross-check against long double") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        Rational x(Int(1 + rng.below(100000)), Int(1 + rng.below(100)));
        long num = 1 + static_cast<long>(rng.below(5));
        long den = 1 + static_cast<long>(rng.below(5));
        Rational u = upper_pow(x, num, den);
        long double expect =
            powl(static_cast<long double>(x.to_double()), static_cast<long double>(num) / den);
        long double got = static_cast<long double>(u.to_double());
        CHECK(got >= expect * (1.0L - 1e-12L));
        CHECK(got <= expect * (1.0L + 1e-12L));
    }
}
