#pragma once

#include "polyvar/variety.hpp"

namespace polyvar {

/// Representatives of a basis of the degree-<= m quotient modulo I(V): the
/// standard monomials of the leading-term ideal, taken as their own
/// representatives. No nonzero combination of them lies in I(V).
struct QuotientBasis {
    int m = 0;
    std::vector<Polynomial> representatives;
};

QuotientBasis quotient_basis(const Variety& v, int m, const Budget& budget = {});

struct SiegelOptions {
    Budget budget;
    int degree_cap = 30;
    int sample_rounds = 4;  // per-degree sample enlargements before ascending
    std::vector<Ideal> avoid;  // result must stay outside these ideals too
};

struct SiegelResult {
    Polynomial p;
    int degree = 0;
    bool minimal = false;
    bool non_member_of_v = false;        // checked, not assumed
    size_t certified_targets = 0;        // exact per-target certificates that passed
    Rational degree_ratio;               // measured against the (deg T / deg V)^(1/(d-l)) target
    bool degree_ratio_available = false;
};

/// Smallest-degree polynomial vanishing exactly on every point of S without
/// vanishing identically on V (points need not lie on V). Feasible at the
/// latest once affine_hilbert(V, m) > |S|.
SiegelResult vanish_on_points(const Variety& v, const std::vector<RationalPoint>& s,
                              const SiegelOptions& opts = {});

/// Sample-then-certify search: propose from point samples of each target (its
/// parameterization, or an automatic one when the target ideal is linear),
/// certify by exact ideal membership for every target, enlarging samples on
/// certificate failure before raising the degree.
SiegelResult vanish_on_varieties(const Variety& v, const std::vector<Variety>& targets,
                                 const SiegelOptions& opts = {});

}  // namespace polyvar
