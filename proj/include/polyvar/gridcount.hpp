#pragma once

#include "polyvar/polynomial.hpp"

namespace polyvar {

struct Box {
    std::vector<Rational> lo, hi;
    int dims() const { return static_cast<int>(lo.size()); }
};

/// Approximate component counts from exact sign sampling on a regular grid
/// (n <= 3). Complement regions join same-sign axis neighbors; the zero set
/// joins cells whose corners carry a zero or a sign change.
struct GridComponentEstimate {
    int resolution = 0;
    size_t zero_components = 0;
    size_t complement_components = 0;
    size_t positive_components = 0;
    size_t negative_components = 0;
};

GridComponentEstimate estimate_components_grid(const Polynomial& p, const Box& box, int resolution);

/// Runs the estimate at the given and doubled resolution; the advisory flag
/// trips when the two finest counts disagree.
struct StableGridEstimate {
    GridComponentEstimate coarse, fine;
    bool resolution_too_coarse = false;
};

StableGridEstimate stable_components_grid(const Polynomial& p, const Box& box, int resolution);

/// Bound-formula statements (no algorithmic content): connected-component
/// budget of a full-cover model and the cell-visit budget of a variety
/// against a partitioning polynomial.
Rational b0_bound_value(int delta, long deg_v, int d);                 // delta^d * deg(V)
Rational cell_visit_bound_value(long deg_v, long deg_p, int d);        // deg(V) * deg(P)^d

}  // namespace polyvar
