#include <doctest.h>

#include "polyvar/fixtures.hpp"
#include "polyvar/ideal.hpp"
#include "polyvar/rng.hpp"

using namespace polyvar;

namespace {
Polynomial P(const std::string& s, int n) { return Polynomial::parse(s, n); }
}  // namespace

TEST_CASE("buchberger on trivial inputs") {
    GroebnerBasis gb = buchberger({P("x0", 2)}, MonomialOrder::grevlex());
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == P("x0", 2));

    GroebnerBasis unit = buchberger({P("x0", 1), P("x0 + 1", 1)}, MonomialOrder::grevlex());
    CHECK(unit.is_unit());
}

TEST_CASE("twisted cubic basis contains the three quadrics") {
    GroebnerBasis gb =
        buchberger({P("x1 - x0^2", 3), P("x2 - x0^3", 3)}, MonomialOrder::grevlex());
    auto contains = [&](const std::string& s) {
        Polynomial want = P(s, 3).monic(gb.order);
        for (const auto& b : gb.basis)
            if (b == want) return true;
        return false;
    };
    CHECK(contains("x0^2 - x1"));
    CHECK(contains("x0*x1 - x2"));
    CHECK(contains("x1^2 - x0*x2"));
}

TEST_CASE("every S-polynomial of a produced basis reduces to zero") {
    std::vector<std::vector<Polynomial>> systems = {
        {P("x1 - x0^2", 3), P("x2 - x0^3", 3)},
        {P("x0^2 + x1^2 - 1", 2)},
        {P("x1 - x0^2", 3), P("x0*x2 - x1^2", 3)},
        {P("x0^2 - x0", 2), P("x1^2 - x1", 2)},
        {P("x0*x1 - x2^2", 3), P("x0^2 - x1*x2", 3), P("x1^3 - x0*x2^2", 3)},
    };
    for (const auto& gens : systems) {
        GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex());
        for (size_t i = 0; i < gb.basis.size(); ++i)
            for (size_t j = i + 1; j < gb.basis.size(); ++j) {
                Polynomial s = s_polynomial(gb.basis[i], gb.basis[j], gb.order);
                CHECK(normal_form(s, gb).is_zero());
            }
    }
}

TEST_CASE("normal form examples and linearity") {
    GroebnerBasis gb = buchberger({P("x0^2 - x1", 2)}, MonomialOrder::grevlex());
    CHECK(normal_form(P("x0^2", 2), gb) == P("x1", 2));
    CHECK(normal_form(P("x0^2 - x1", 2), gb).is_zero());
    Rng rng(23);
    for (int i = 0; i < 30; ++i) {
        Polynomial p(2), q(2);
        for (int t = 0; t < 4; ++t) {
            Monomial m(2);
            m.exps[0] = static_cast<int>(rng.below(4));
            m.exps[1] = static_cast<int>(rng.below(4));
            p.add_term(m, Rational(rng.int_in(-4, 4)));
            Monomial m2(2);
            m2.exps[0] = static_cast<int>(rng.below(4));
            m2.exps[1] = static_cast<int>(rng.below(4));
            q.add_term(m2, Rational(rng.int_in(-4, 4)));
        }
        Polynomial lhs = normal_form(p + q, gb);
        Polynomial rhs = normal_form(normal_form(p, gb) + q, gb);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("membership distinguishes radical membership") {
    Ideal cubic = fixtures::twisted_cubic().ideal;
    CHECK(membership(P("x1 - x0^2", 3), cubic));
    CHECK(!membership(P("x0", 3), Ideal({P("x0^2", 3)}, 3)));
    // random combinations of generators are members
    Rng rng(29);
    for (int i = 0; i < 20; ++i) {
        Polynomial combo(3);
        for (const auto& g : cubic.generators()) {
            Polynomial multiplier(3);
            Monomial m(3);
            m.exps[0] = static_cast<int>(rng.below(3));
            multiplier.add_term(m, Rational(rng.int_in(-3, 3)));
            combo += multiplier * g;
        }
        CHECK(membership(combo, cubic));
    }
}

TEST_CASE("deterministic output for a fixed order") {
    auto gens = std::vector<Polynomial>{P("x1 - x0^2", 3), P("x0*x2 - x1^2", 3)};
    GroebnerBasis a = buchberger(gens, MonomialOrder::grevlex());
    GroebnerBasis b = buchberger(gens, MonomialOrder::grevlex());
    REQUIRE(a.basis.size() == b.basis.size());
    for (size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
}

TEST_CASE("degree budget guardrail") {
    Budget tight;
    tight.max_degree = 2;
    CHECK_THROWS_AS(buchberger({P("x0^9 - x1", 2), P("x1^9 - x0^2*x1", 2)},
                               MonomialOrder::grevlex(), tight),
                    DegreeBudgetExceeded);
}

TEST_CASE("groebner cache is per order and consistent") {
    Ideal cubic = fixtures::twisted_cubic().ideal;
    const GroebnerBasis& g1 = cubic.groebner();
    const GroebnerBasis& g2 = cubic.groebner();
    CHECK(&g1 == &g2);
    // mutual membership spot-check: basis generates the same ideal
    for (const auto& b : g1.basis) CHECK(membership(b, cubic));
    Ideal from_basis(g1.basis, 3);
    for (const auto& g : cubic.generators()) CHECK(membership(g, from_basis));
}
