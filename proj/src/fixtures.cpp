#include "polyvar/fixtures.hpp"

namespace polyvar {
namespace fixtures {

namespace {
Polynomial P(const std::string& text, int n) { return Polynomial::parse(text, n); }
}  // namespace

Variety twisted_cubic() {
    Variety v = Variety::from_ideal(Ideal({P("x1 - x0^2", 3), P("x2 - x0^3", 3)}, 3));
    v.attach_parameterization({P("x0", 1), P("x0^2", 1), P("x0^3", 1)});
    return v;
}

Variety circle() { return Variety::from_ideal(Ideal({P("x0^2 + x1^2 - 1", 2)}, 2)); }

Variety parabola() {
    Variety v = Variety::from_ideal(Ideal({P("x1 - x0^2", 2)}, 2));
    v.attach_parameterization({P("x0", 1), P("x0^2", 1)});
    return v;
}

Variety line_in_3() {
    Variety v = Variety::from_ideal(Ideal({P("x0", 3), P("x1", 3)}, 3));
    v.attach_parameterization({Polynomial::zero(1), Polynomial::zero(1), P("x0", 1)});
    return v;
}

Variety plane_curve(int e) {
    Variety v = Variety::from_ideal(
        Ideal({P("x1 - x0^" + std::to_string(e), 2)}, 2));
    v.attach_parameterization({P("x0", 1), P("x0^" + std::to_string(e), 1)});
    return v;
}

Variety whole_plane() {
    Variety v;
    v.ideal = Ideal(2);
    v.dim = 2;
    v.degree = 1;
    v.attach_parameterization({P("x0", 2), P("x1", 2)});
    return v;
}

Ideal cubic_union_line_ideal() { return Ideal({P("x1 - x0^2", 3), P("x0*x2 - x1^2", 3)}, 3); }

Ideal four_points_ideal() { return Ideal({P("x0^2 - x0", 2), P("x1^2 - x1", 2)}, 2); }

Ideal unit_ideal(int nvars) { return Ideal({Polynomial::constant(nvars, Rational(1))}, nvars); }

RationalPoint circle_point(size_t index) {
    Rational t = rational_stream(index + 1);  // skip t = 0's neighbor duplicates deliberately
    Rational t2 = t * t;
    Rational denom = Rational(1) + t2;
    RationalPoint p;
    p.coords.push_back((Rational(1) - t2) / denom);
    p.coords.push_back(Rational(2) * t / denom);
    return p;
}

}  // namespace fixtures
}  // namespace polyvar
