#include <doctest.h>

#include "polyvar/fixtures.hpp"
#include "polyvar/linalg.hpp"
#include "polyvar/rng.hpp"
#include "polyvar/siegel.hpp"

using namespace polyvar;

namespace {
Polynomial P(const std::string& s, int n) { return Polynomial::parse(s, n); }

Variety whole_space(int n) {
    Variety v;
    v.ideal = Ideal(n);
    v.dim = n;
    v.degree = 1;
    return v;
}

RationalPoint rpt(std::vector<long> cs) {
    RationalPoint p;
    for (long c : cs) p.coords.push_back(Rational(c));
    return p;
}

// Exhaustive infeasibility check at degree m - 1: the evaluation matrix of the
// quotient basis has trivial nullspace.
bool infeasible_below(const Variety& v, const std::vector<RationalPoint>& s, int m) {
    if (m == 0) return true;
    QuotientBasis qb = quotient_basis(v, m - 1);
    if (qb.representatives.empty()) return true;
    Matrix rows;
    for (const auto& p : s) {
        Row row;
        for (const auto& q : qb.representatives) row.push_back(q.evaluate(p));
        rows.push_back(std::move(row));
    }
    return nullspace(rows, qb.representatives.size()).empty();
}
}  // namespace

TEST_CASE("quotient basis fixtures") {
    Variety axis = Variety::from_ideal(Ideal({P("x0", 2)}, 2));
    QuotientBasis qb = quotient_basis(axis, 2);
    REQUIRE(qb.representatives.size() == 3);  // 1, x1, x1^2
    CHECK(qb.representatives[0] == P("1", 2));
    CHECK(qb.representatives[1] == P("x1", 2));
    CHECK(qb.representatives[2] == P("x1^2", 2));

    QuotientBasis cubic = quotient_basis(fixtures::twisted_cubic(), 1);
    CHECK(cubic.representatives.size() == 4);  // H(1) = 4

    Variety unit;
    unit.ideal = fixtures::unit_ideal(2);
    CHECK(quotient_basis(unit, 3).representatives.empty());
}

TEST_CASE("vanish_on_points: two generic points need a line") {
    Variety plane = whole_space(2);
    SiegelResult r = vanish_on_points(plane, {rpt({0, 0}), rpt({1, 2})});
    CHECK(r.degree == 1);
    CHECK(r.minimal);
    CHECK(r.non_member_of_v);
}

TEST_CASE("vanish_on_points on the circle at (1,0)") {
    SiegelResult r = vanish_on_points(fixtures::circle(), {rpt({1, 0})});
    CHECK(r.degree == 1);  // constants vanish nowhere; a line works
    CHECK(!membership(r.p, fixtures::circle().ideal));
    CHECK(r.p.evaluate(rpt({1, 0})) == Rational(0));
}

TEST_CASE("vanish_on_points randomized: exactness, minimality, pigeonhole feasibility") {
    Rng rng(331);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.below(3));  // 2..4 variables
        Variety v = whole_space(n);
        size_t count = 1 + rng.below(40);
        std::vector<RationalPoint> pts;
        for (size_t i = 0; i < count; ++i) {
            RationalPoint p;
            for (int c = 0; c < n; ++c)
                p.coords.push_back(Rational(Int(rng.int_in(-9, 9)), Int(rng.int_in(1, 4))));
            pts.push_back(std::move(p));
        }
        SiegelResult r = vanish_on_points(v, pts);
        for (const auto& p : pts) CHECK(r.p.evaluate(p) == Rational(0));
        CHECK(!membership(r.p, v.ideal));
        CHECK(infeasible_below(v, pts, r.degree));
        // feasibility bound: the returned degree never exceeds the pigeonhole degree
        int pigeonhole = 0;
        while (affine_hilbert(v.ideal, pigeonhole) <= static_cast<long>(pts.size())) ++pigeonhole;
        CHECK(r.degree <= pigeonhole);
    }
}

TEST_CASE("vanish_on_varieties: line targets in 3-space") {
    Variety space = whole_space(3);
    Variety axis = Variety::from_ideal(Ideal({P("x1", 3), P("x2", 3)}, 3));
    SiegelResult r = vanish_on_varieties(space, {axis});
    CHECK(r.degree == 1);
    CHECK(membership(r.p, axis.ideal));
    CHECK(!membership(r.p, space.ideal));
}

TEST_CASE("vanish_on_varieties: z-axis against the parabolic cylinder") {
    Variety surface = Variety::from_ideal(Ideal({P("x1 - x0^2", 3)}, 3));
    Variety axis = Variety::from_ideal(Ideal({P("x0", 3), P("x1", 3)}, 3));
    SiegelResult r = vanish_on_varieties(surface, {axis});
    CHECK(membership(r.p, axis.ideal));
    CHECK(!membership(r.p, surface.ideal));
    CHECK(r.degree <= 2);
}

TEST_CASE("vanish_on_varieties uses explicit parameterizations") {
    Variety space = whole_space(3);
    Variety cubic = fixtures::twisted_cubic();
    SiegelResult r = vanish_on_varieties(space, {cubic});
    CHECK(membership(r.p, cubic.ideal));
    CHECK(r.degree == 2);  // the cubic lies on quadrics but no hyperplane
}

TEST_CASE("missing point oracle is reported") {
    Variety space = whole_space(2);
    Variety circ = fixtures::circle();  // no polynomial parameterization, not linear
    CHECK_THROWS_AS(vanish_on_varieties(space, {circ}), MissingPointOracle);
}
