#include <doctest.h>

#include "polyvar/fixtures.hpp"
#include "polyvar/hilbert.hpp"
#include "polyvar/split.hpp"

using namespace polyvar;

namespace {
Polynomial P(const std::string& s, int n) { return Polynomial::parse(s, n); }
}  // namespace

TEST_CASE("factor heuristic: monomial content") {
    FactorResult fr = factor_heuristic(P("x0*x1", 2));
    REQUIRE(fr.status == FactorResult::Status::Factored);
    CHECK(fr.factors.size() == 2);
}

TEST_CASE("factor heuristic: quadrics decided completely") {
    CHECK(factor_heuristic(P("x0^2 + x1^2 - 1", 2)).status == FactorResult::Status::Irreducible);
    FactorResult dos = factor_heuristic(P("x0^2 - x1^2", 2));
    REQUIRE(dos.status == FactorResult::Status::Factored);
    CHECK(dos.factors.size() == 2);
    // rank-2 with nonsquare ratio: irreducible over Q
    CHECK(factor_heuristic(P("x0^2 - 2*x1^2", 2)).status == FactorResult::Status::Irreducible);
    // rank-1: a doubled line
    FactorResult dbl = factor_heuristic(P("x0^2 + 2*x0*x1 + x1^2", 2));
    REQUIRE(dbl.status == FactorResult::Status::Factored);
    REQUIRE(dbl.factors.size() == 1);
    CHECK(dbl.factors[0].degree() == 1);
    // affine quadric splitting into parallel lines
    FactorResult par = factor_heuristic(P("x0^2 - 1", 2));
    REQUIRE(par.status == FactorResult::Status::Factored);
    CHECK(par.factors.size() == 2);
}

TEST_CASE("factor heuristic: linear-in-a-variable certificate") {
    CHECK(factor_heuristic(P("x1 - x0^2", 3)).status == FactorResult::Status::Irreducible);
    CHECK(factor_heuristic(P("x2 - x0^3", 3)).status == FactorResult::Status::Irreducible);
}

TEST_CASE("factor heuristic: univariate roots and certificates") {
    FactorResult cubic = factor_heuristic(P("x0^3 - x0", 1));
    REQUIRE(cubic.status == FactorResult::Status::Factored);
    // no rational root, degree 3: irreducible
    CHECK(factor_heuristic(P("x0^3 - 2", 1)).status == FactorResult::Status::Irreducible);
    FactorResult quartic = factor_heuristic(P("x0^4 - 5*x0^2 + 4", 1));
    CHECK(quartic.status == FactorResult::Status::Factored);
}

TEST_CASE("split (x0*x1) into the two axes") {
    std::vector<Ideal> comps = split_components(Ideal({P("x0*x1", 2)}, 2));
    REQUIRE(comps.size() == 2);
    bool saw_x0 = false, saw_x1 = false;
    for (const auto& c : comps) {
        if (same_ideal(c, Ideal({P("x0", 2)}, 2))) saw_x0 = true;
        if (same_ideal(c, Ideal({P("x1", 2)}, 2))) saw_x1 = true;
    }
    CHECK(saw_x0);
    CHECK(saw_x1);
}

TEST_CASE("split the cubic-union-line fixture") {
    std::vector<Ideal> comps = split_components(fixtures::cubic_union_line_ideal());
    REQUIRE(comps.size() == 2);
    Ideal cubic = fixtures::twisted_cubic().ideal;
    Ideal line({P("x0", 3), P("x1", 3)}, 3);
    bool saw_cubic = false, saw_line = false;
    for (const auto& c : comps) {
        HilbertData dd = dimension_and_degree(c);
        CHECK(dd.dim == 1);  // both components are curves
        if (same_ideal(c, cubic)) saw_cubic = true;
        if (same_ideal(c, line)) saw_line = true;
    }
    CHECK(saw_cubic);
    CHECK(saw_line);
}

TEST_CASE("generic irreducible quadric: itself or incomplete") {
    try {
        std::vector<Ideal> comps = split_components(fixtures::circle().ideal);
        REQUIRE(comps.size() == 1);
        CHECK(same_ideal(comps[0], fixtures::circle().ideal));
    } catch (const DecompositionIncomplete&) {
        // also acceptable by contract
    }
}

TEST_CASE("splitting radicalizes embedded multiplicity") {
    std::vector<Ideal> comps = split_components(Ideal({P("x0^2", 2)}, 2));
    REQUIRE(comps.size() == 1);
    CHECK(same_ideal(comps[0], Ideal({P("x0", 2)}, 2)));
}

TEST_CASE("zero-dimensional point sets split into points") {
    std::vector<Ideal> comps = split_components(fixtures::four_points_ideal());
    CHECK(comps.size() == 4);
    for (const auto& c : comps) {
        HilbertData dd = dimension_and_degree(c);
        CHECK(dd.dim == 0);
        CHECK(dd.degree == 1);
    }
}

TEST_CASE("zero ideal splits to itself") {
    std::vector<Ideal> comps = split_components(Ideal(3));
    REQUIRE(comps.size() == 1);
    CHECK(!comps[0].has_generators());
}

TEST_CASE("plane union surface keeps maximal components only") {
    // (x0 * (x1 - x0^2)): a line and a parabola in the plane
    std::vector<Ideal> comps = split_components(Ideal({P("x0*x1 - x0^3", 2)}, 2));
    REQUIRE(comps.size() == 2);
}
