#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyvar/monomial.hpp"
#include "polyvar/rational.hpp"

namespace polyvar {

/// A point with exact rational coordinates.
struct RationalPoint {
    std::vector<Rational> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
    int nvars() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.coords == b.coords;
    }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
        return a.coords < b.coords;
    }
    std::string to_string() const;
};

/// Sparse multivariate polynomial over Q. Terms are kept in canonical grevlex
/// order with no zero coefficients; the zero polynomial has no terms and no
/// numeric degree (is_zero() is the sentinel, degree() asserts).
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, CanonicalMonomialLess>;

    Polynomial() : n_(0) {}
    explicit Polynomial(int nvars) : n_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);
    static Polynomial term(int nvars, const Monomial& m, const Rational& c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    /// Total degree. Precondition: nonzero (the zero polynomial's degree is
    /// not a number here; use degree_or for lenient contexts).
    int degree() const;
    int degree_or(int fallback) const { return is_zero() ? fallback : degree(); }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const;
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Strict deterministic ordering (by canonical term sequence); used for
    /// reproducible sorts, not algebra.
    static bool canonical_less(const Polynomial& a, const Polynomial& b);

    Rational evaluate(const RationalPoint& p) const;
    /// Substitute subs[i] for variable i (all subs share an ambient dimension).
    Polynomial compose(const std::vector<Polynomial>& subs) const;

    Rational coeff(const Monomial& m) const;
    Rational constant_coeff() const { return coeff(Monomial(n_)); }

    /// Leading data with respect to an arbitrary order (linear scan).
    const Monomial& leading_monomial(const MonomialOrder& ord) const;
    Rational leading_coeff(const MonomialOrder& ord) const;
    Polynomial monic(const MonomialOrder& ord) const;

    /// Extend/restrict the ambient dimension (new variables get exponent 0;
    /// restriction requires the dropped variables to be absent).
    Polynomial with_nvars(int m) const;
    int max_exponent(int var) const;

    std::string to_string() const;
    static Polynomial parse(const std::string& text, int nvars);

private:
    int n_;
    TermMap terms_;
};

/// All monomials in n variables of total degree <= m, sorted ascending by ord.
/// Exactly C(n+m, n) of them.
std::vector<Monomial> monomials_up_to(int n, int m,
                                      const MonomialOrder& ord = MonomialOrder::grevlex());

Int binomial(long n, long k);

}  // namespace polyvar
