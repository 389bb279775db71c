#pragma once

#include <map>

#include "polyvar/profile.hpp"
#include "polyvar/variety.hpp"

namespace polyvar {

/// a . y + offset in the lifted space; not all entries zero.
struct Hyperplane {
    std::vector<Rational> normal;
    Rational offset;

    Rational value_at(const std::vector<Rational>& y) const {
        Rational acc = offset;
        for (size_t i = 0; i < normal.size(); ++i) acc += normal[i] * y[i];
        return acc;
    }
};

struct HamSandwichOptions {
    uint64_t seed = 0;
    size_t phase_a_cap = 300000;  // one-point-per-set candidates
    size_t phase_b_cap = 300000;  // sampled subsets before the systematic sweep
    size_t full_sweep_cap = 0;    // 0 = unbounded (completeness)
};

/// Bisecting hyperplane: every set has at most half its points strictly on
/// each open side. Exhaustive spanned-hyperplane search (plus degenerate
/// candidates completed by coordinate directions), first valid candidate
/// under a deterministic seed-driven ordering; a symbolic-perturbation pass
/// (index tie-break for on-plane points) runs before giving up.
Hyperplane discrete_ham_sandwich(const std::vector<std::vector<std::vector<Rational>>>& sets,
                                 const HamSandwichOptions& opts = {});

struct BisectResult {
    Polynomial g;
    Hyperplane lifted;
    int m = 0;           // quotient degree
    int lifted_dim = 0;  // t
};

/// Lifts all points through the quotient basis of degree m (the injective
/// monomial map on V(R)), ham-sandwiches the lifted sets, and pulls the
/// hyperplane back to a polynomial g not in I(V). Requires
/// #sets < affine_hilbert(V, m).
BisectResult bisect_sets(const Variety& v, const std::vector<std::vector<RationalPoint>>& sets,
                         int m, const HamSandwichOptions& opts = {}, const Budget& budget = {});

struct PartitionConstants {
    Rational c0 = Rational(1);
    Rational c1 = Rational(1, 4);
};

struct RoundCensus {
    std::map<std::vector<int>, size_t> class_sizes;  // sign vector -> count
    size_t on_zero_set = 0;
    size_t max_class = 0;
    int bisector_degree = 0;
    int quotient_degree = 0;  // m used this round
};

struct PartitionReport {
    int i_v = 0;
    bool i_v_fallback = false;
    Rational r_target;  // M^(n-s) * Delta_s
    size_t rounds = 0;
    std::vector<RoundCensus> census;
    size_t final_max_class = 0;
    int total_degree = 0;  // sum of bisector degrees = deg(g)
    Rational degree_over_m;
};

struct BisectorChain {
    std::vector<Polynomial> rounds;
    Polynomial product(int nvars) const {
        Polynomial g = Polynomial::constant(nvars, Rational(1));
        for (const auto& h : rounds) g = g * h;
        return g;
    }
};

struct PartitionOptions {
    HamSandwichOptions hs;
    Budget budget;
    PartitionConstants constants;
    size_t max_rounds = 30;
};

/// Recursive simultaneous bisection: round i bisects every nonempty sign
/// class at the smallest feasible quotient degree; points landing on a
/// bisector's zero set stay in the census as "on Z(g)" and leave later rounds.
std::pair<BisectorChain, PartitionReport> partition(const Variety& v, const DeltaProfile& profile,
                                                    const std::vector<RationalPoint>& s, long m_value,
                                                    const PartitionOptions& opts = {});

/// Sign vector of a point under the chain (0 entries mean "on a zero set").
std::vector<int> chain_signs(const BisectorChain& chain, const RationalPoint& p);

}  // namespace polyvar
