#include <doctest.h>

#include "polyvar/combination.hpp"
#include "polyvar/polynomial.hpp"
#include "polyvar/rng.hpp"

using namespace polyvar;

namespace {
Polynomial P(const std::string& s, int n) { return Polynomial::parse(s, n); }

Polynomial random_poly(Rng& rng, int n, int max_deg, int terms) {
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n);
        int budget = static_cast<int>(rng.below(static_cast<uint64_t>(max_deg) + 1));
        for (int v = 0; v < n && budget > 0; ++v) {
            int e = static_cast<int>(rng.below(static_cast<uint64_t>(budget) + 1));
            m.exps[static_cast<size_t>(v)] = e;
            budget -= e;
        }
        long num = rng.int_in(-9, 9);
        long den = rng.int_in(1, 6);
        p.add_term(m, Rational(Int(num), Int(den)));
    }
    return p;
}

RationalPoint random_point(Rng& rng, int n) {
    RationalPoint p;
    for (int v = 0; v < n; ++v)
        p.coords.push_back(Rational(Int(rng.int_in(-7, 7)), Int(rng.int_in(1, 5))));
    return p;
}
}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(Int(2), Int(4)) == rational_of(1, 2));
    CHECK(Rational(Int(-2), Int(-4)) == rational_of(1, 2));
    CHECK(Rational(Int(1), Int(-2)).den() == 2);
    CHECK(Rational(Int(1), Int(-2)).num() == -1);
    CHECK(Rational(0).to_string() == "0");
    CHECK(rational_of(-3, 9).to_string() == "-1/3");
    CHECK(Rational::from_string(" -3 / 9 ") == rational_of(-1, 3));
    CHECK(rational_of(2, 3).pow(-2) == rational_of(9, 4));
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), DomainError);
}

TEST_CASE("addition cancels and respects identities") {
    Polynomial a = P("x0 + 1", 2);
    Polynomial b = P("-x0", 2);
    CHECK((a + b) == P("1", 2));
    Polynomial p = P("3/2*x0^2*x1 - x2 + 1", 3);
    CHECK((p + Polynomial::zero(3)) == p);
    CHECK((P("1/2*x0^2", 1) + P("1/3*x0^2", 1)) == P("5/6*x0^2", 1));
    CHECK_THROWS_AS(P("x0", 2) + P("x0", 3), DimensionMismatch);
}

TEST_CASE("multiplication: difference of squares, identity, degree additivity") {
    CHECK((P("x0 - 1", 1) * P("x0 + 1", 1)) == P("x0^2 - 1", 1));
    Polynomial p = P("x0*x1 - 2*x2", 3);
    CHECK((p * Polynomial::constant(3, Rational(1))) == p);
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_poly(rng, 3, 4, 5);
        Polynomial b = random_poly(rng, 3, 4, 5);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("ring axioms on randomized triples") {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = random_poly(rng, 2, 3, 4);
        Polynomial b = random_poly(rng, 2, 3, 4);
        Polynomial c = random_poly(rng, 2, 3, 4);
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * (b * c)) == ((a * b) * c));
    }
}

TEST_CASE("evaluation is exact and linear") {
    Polynomial circle = P("x0^2 + x1^2 - 1", 2);
    CHECK(circle.evaluate(RationalPoint({Rational(1), Rational(0)})) == Rational(0));
    CHECK(circle.evaluate(RationalPoint({Rational(0), Rational(0)})) == Rational(-1));
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_poly(rng, 3, 3, 4);
        Polynomial q = random_poly(rng, 3, 3, 4);
        RationalPoint s = random_point(rng, 3);
        CHECK((p + q).evaluate(s) == p.evaluate(s) + q.evaluate(s));
    }
}

TEST_CASE("monomial enumeration counts and order") {
    auto ms = monomials_up_to(2, 1);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0].degree() == 0);
    CHECK(ms[1].exps == std::vector<int>{0, 1});  // x1 before x0 ascending
    CHECK(ms[2].exps == std::vector<int>{1, 0});
    CHECK(monomials_up_to(3, 2).size() == 10);
    CHECK(monomials_up_to(1, 5).size() == 6);
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 5; ++m)
            CHECK(Int(monomials_up_to(n, m).size()) == binomial(n + m, n));
}

TEST_CASE("serialization round-trips") {
    std::vector<std::string> fixtures = {
        "3/2*x0^2*x1 - x2 + 1", "x0^2 + x1^2 - 1", "-x0", "x1 - x0^2", "0 + x0 - x0", "7",
        "1/3*x0^4*x1^2*x2 - 2/5*x2^3 + x0 - 19"};
    for (const auto& s : fixtures) {
        Polynomial p = P(s, 3);
        CHECK(Polynomial::parse(p.to_string(), 3) == p);
    }
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(rng, 4, 5, 7);
        CHECK(Polynomial::parse(p.to_string(), 4) == p);
    }
    CHECK_THROWS_AS(P("x3", 3), ParseError);
    CHECK_THROWS_AS(P("x0 +", 3), ParseError);
    CHECK_THROWS_AS(P("y0", 3), ParseError);
}

TEST_CASE("degree of zero polynomial is guarded") {
    CHECK_THROWS_AS(Polynomial::zero(2).degree(), DomainError);
    CHECK(Polynomial::zero(2).degree_or(-1) == -1);
    CHECK(Polynomial::zero(2).is_zero());
}

TEST_CASE("grevlex and lex orders") {
    MonomialOrder grevlex = MonomialOrder::grevlex();
    Monomial x0({1, 0}), x1({0, 1});
    CHECK(grevlex.less(x1, x0));
    // grevlex in 3 vars: x0*x2 < x1^2
    Monomial a({1, 0, 1}), b({0, 2, 0});
    CHECK(MonomialOrder::grevlex().less(a, b));
    MonomialOrder lex = MonomialOrder::lex();
    CHECK(lex.less(Monomial({0, 5}), Monomial({1, 0})));
}

TEST_CASE("generic_combination honors postconditions") {
    // Membership in I(Z(x0)) forces a nonzero x1 coefficient.
    std::vector<Polynomial> polys = {P("x0", 2), P("x1", 2)};
    Ideal axis({P("x0", 2)}, 2);
    Polynomial f = generic_combination(polys, {}, {axis});
    CHECK(!membership(f, axis));

    // A single admissible polynomial is returned as-is.
    Polynomial self = generic_combination({P("x1", 2)}, {}, {axis});
    CHECK(self == P("x1", 2));

    // Vanishing constraints are verified exactly.
    RationalPoint origin({Rational(0), Rational(0)});
    Polynomial g = generic_combination(polys, {origin}, {axis});
    CHECK(g.evaluate(origin) == Rational(0));

    // Exhaustion signals instead of returning an invalid combination.
    CHECK_THROWS_AS(generic_combination({P("x0", 2)}, {}, {axis}), RetriesExhausted);
}
