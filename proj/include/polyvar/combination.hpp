#pragma once

#include <cstdint>

#include "polyvar/ideal.hpp"

namespace polyvar {

struct CombinationOptions {
    uint64_t seed = 0;
    int attempts = 96;        // total candidate budget after the unit vectors
    int window_start = 3;     // coefficients drawn from [-w, w], w doubling
    int window_rounds = 16;   // retries per window before doubling
    Budget budget;
};

/// A linear combination f = sum c_j polys_j with small integer c_j such that f
/// vanishes on every listed point and is not a member of any listed ideal.
/// Unit-vector candidates are tried first (a single admissible input returns
/// itself), then seeded random windows. Both postconditions are checked, never
/// assumed; failure after the attempt budget raises RetriesExhausted.
Polynomial generic_combination(const std::vector<Polynomial>& polys,
                               const std::vector<RationalPoint>& must_vanish_on,
                               const std::vector<Ideal>& must_not_vanish_on,
                               const CombinationOptions& opts = {});

}  // namespace polyvar
