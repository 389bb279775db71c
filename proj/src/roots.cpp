#include "polyvar/roots.hpp"

#include "polyvar/errors.hpp"

namespace polyvar {

namespace {

const unsigned kScaleBits = 64;

// floor((a * 2^(64k))^(1/k)) and whether the root is exact.
Int scaled_floor_root(const Int& a, unsigned k, bool& exact) {
    Int scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), a.get_mpz_t(), kScaleBits * k);
    Int r;
    exact = mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), k) != 0;
    return r;
}

}  // namespace

Rational upper_kth_root(const Rational& x, unsigned k) {
    if (k == 0) throw DomainError("zeroth root");
    if (x.sign() < 0) throw DomainError("root of a negative rational");
    if (x.is_zero()) return Rational(0);
    if (k == 1) return x;
    // x = p/q; x^(1/k) = (p q^(k-1))^(1/k) / q.
    Int p = x.num(), q = x.den();
    Int a = p;
    for (unsigned i = 1; i < k; ++i) a *= q;
    bool exact = false;
    Int r = scaled_floor_root(a, k, exact);
    if (!exact) r += 1;
    Int denom;
    mpz_mul_2exp(denom.get_mpz_t(), q.get_mpz_t(), kScaleBits);
    return Rational(r, denom);
}

Rational lower_kth_root(const Rational& x, unsigned k) {
    if (k == 0) throw DomainError("zeroth root");
    if (x.sign() < 0) throw DomainError("root of a negative rational");
    if (x.is_zero()) return Rational(0);
    if (k == 1) return x;
    Int p = x.num(), q = x.den();
    Int a = p;
    for (unsigned i = 1; i < k; ++i) a *= q;
    bool exact = false;
    Int r = scaled_floor_root(a, k, exact);
    Int denom;
    mpz_mul_2exp(denom.get_mpz_t(), q.get_mpz_t(), kScaleBits);
    return Rational(r, denom);
}

Rational lower_pow(const Rational& x, long num, long den) {
    if (den < 1 || num < 0) throw DomainError("lower_pow exponent out of range");
    if (x.sign() < 0) throw DomainError("power of a negative rational");
    if (x.is_zero()) return num == 0 ? Rational(1) : Rational(0);
    Rational powed = x.pow(num);
    return den == 1 ? powed : lower_kth_root(powed, static_cast<unsigned>(den));
}

Rational upper_pow(const Rational& x, long num, long den) {
    if (den < 1) throw DomainError("power with nonpositive root index");
    if (x.sign() < 0) throw DomainError("power of a negative rational");
    if (x.is_zero()) {
        if (num <= 0) throw DomainError("zero to a nonpositive power");
        return Rational(0);
    }
    if (num == 0) return Rational(1);
    if (num > 0) {
        Rational powed = x.pow(num);
        return den == 1 ? powed : upper_kth_root(powed, static_cast<unsigned>(den));
    }
    // x^(num/den) = 1 / x^(-num/den): divide by a lower approximation.
    Rational powed = x.pow(-num);
    Rational root = den == 1 ? powed : lower_kth_root(powed, static_cast<unsigned>(den));
    if (root.is_zero()) throw DomainError("underflow in outward power");
    return root.inv();
}

}  // namespace polyvar
