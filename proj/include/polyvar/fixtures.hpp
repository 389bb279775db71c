#pragma once

#include "polyvar/variety.hpp"

namespace polyvar {
namespace fixtures {

/// Twisted cubic (t, t^2, t^3) in three variables; parameterized.
Variety twisted_cubic();
/// Unit circle in the plane (no polynomial parameterization).
Variety circle();
/// Parabola x1 = x0^2; parameterized by (t, t^2).
Variety parabola();
/// The z-axis x0 = x1 = 0 in three variables; parameterized.
Variety line_in_3();
/// Plane curve x1 = x0^e (degree e >= 2); parameterized.
Variety plane_curve(int e);
/// The whole plane: zero ideal in two variables, parameterized by (s, t).
Variety whole_plane();
/// Ideal of the union of the twisted cubic and the z-axis.
Ideal cubic_union_line_ideal();
/// Radical ideal of the four points {0,1}^2.
Ideal four_points_ideal();
/// Ideal of the unit circle extended to three variables (cylinder), handy for
/// engineered envelope fixtures.
Ideal unit_ideal(int nvars);

/// Rational points on the unit circle from Pythagorean parameterization
/// ((1-t^2)/(1+t^2), 2t/(1+t^2)), deterministic in the index.
RationalPoint circle_point(size_t index);

}  // namespace fixtures
}  // namespace polyvar
