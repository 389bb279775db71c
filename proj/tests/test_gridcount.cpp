#include <doctest.h>

#include "polyvar/gridcount.hpp"

using namespace polyvar;

namespace {
Polynomial P(const std::string& s, int n) { return Polynomial::parse(s, n); }

Box square(long lo, long hi) {
    Box b;
    b.lo = {Rational(lo), Rational(lo)};
    b.hi = {Rational(hi), Rational(hi)};
    return b;
}
}  // namespace

TEST_CASE("circle: one zero component, two complement components") {
    GridComponentEstimate est = estimate_components_grid(P("x0^2 + x1^2 - 1", 2), square(-2, 2), 200);
    CHECK(est.zero_components == 1);
    CHECK(est.complement_components == 2);
}

TEST_CASE("cross x0*x1: four complement components") {
    GridComponentEstimate est = estimate_components_grid(P("x0*x1", 2), square(-2, 2), 200);
    CHECK(est.complement_components == 4);
    CHECK(est.zero_components == 1);
}

TEST_CASE("two concentric circles: three complement components, stable") {
    StableGridEstimate est = stable_components_grid(
        P("x0^4 + 2*x0^2*x1^2 + x1^4 - 5*x0^2 - 5*x1^2 + 4", 2), square(-3, 3), 200);
    // (x^2+y^2-1)(x^2+y^2-4) expanded
    CHECK(est.coarse.complement_components == 3);
    CHECK(est.fine.complement_components == 3);
    CHECK(!est.resolution_too_coarse);
}

TEST_CASE("univariate zero crossing") {
    Box b;
    b.lo = {Rational(-2)};
    b.hi = {Rational(2)};
    GridComponentEstimate est = estimate_components_grid(P("x0^2 - 1", 1), b, 100);
    CHECK(est.zero_components == 2);
    CHECK(est.complement_components == 3);
}

TEST_CASE("3d sphere surface") {
    Box b;
    b.lo = {Rational(-2), Rational(-2), Rational(-2)};
    b.hi = {Rational(2), Rational(2), Rational(2)};
    GridComponentEstimate est =
        estimate_components_grid(P("x0^2 + x1^2 + x2^2 - 1", 3), b, 24);
    CHECK(est.zero_components == 1);
    CHECK(est.complement_components == 2);
}

TEST_CASE("bound formula statements") {
    CHECK(b0_bound_value(2, 3, 1) == Rational(6));
    CHECK(cell_visit_bound_value(3, 4, 2) == Rational(48));
}

TEST_CASE("dimension guards") {
    CHECK_THROWS_AS(estimate_components_grid(P("x0", 4).with_nvars(4), Box{}, 10),
                    Error);
}
