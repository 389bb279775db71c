#pragma once

#include "polyvar/ideal.hpp"

namespace polyvar {

struct SplitOptions {
    Budget budget;
    int max_depth = 12;
    size_t max_branches = 64;
    int probe_degree = 3;     // zero-divisor probes over standard monomials up to this degree
    int probe_pairs = 240;
    int verify_degree = 2;    // radical-membership verification sample
    size_t verify_budget = 24;
};

/// Outcome of the desk-scale factoring heuristic for a single polynomial.
struct FactorResult {
    enum class Status { Factored, Irreducible, Unknown };
    Status status = Status::Unknown;
    std::vector<Polynomial> factors;  // distinct proper factors when Factored
};

/// Monomial-content extraction, full univariate handling (rational roots,
/// quadratic discriminants, cubic no-root certificates), complete quadric
/// decision via Lagrange diagonalization, and the linear-in-a-variable
/// irreducibility certificate. Anything else is Unknown.
FactorResult factor_heuristic(const Polynomial& g);

/// Heuristic minimal-prime splitting. Branches on factorizations and on
/// saturation pairs (J : h^inf, J + (h)); both branches strictly enlarge the
/// ideal, so the recursion is Noetherian. Returned ideals are deduplicated and
/// pruned to maximal varieties, then checked for the same radical-membership
/// behavior as the input on a monomial sample. Throws DecompositionIncomplete
/// when an ideal can neither be split nor recognized prime; callers must treat
/// that as unknown, never as irreducible.
std::vector<Ideal> split_components(const Ideal& j, const SplitOptions& opts = {});

}  // namespace polyvar
