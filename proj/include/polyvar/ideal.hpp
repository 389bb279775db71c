#pragma once

#include <memory>
#include <vector>

#include "polyvar/polynomial.hpp"

namespace polyvar {

/// Desk-scale guardrails for Groebner-type computations.
struct Budget {
    int max_degree = 40;
    size_t max_basis = 500;
};

struct GroebnerBasis {
    std::vector<Polynomial> basis;  // monic, sorted by leading monomial ascending
    MonomialOrder order;
    bool reduced = false;

    bool is_unit() const {
        return basis.size() == 1 && !basis[0].is_zero() && basis[0].degree() == 0;
    }
    bool is_zero() const { return basis.empty(); }
};

/// Reduced Groebner basis of the given generators; deterministic for a fixed
/// order. Throws DegreeBudgetExceeded when intermediate degrees or the basis
/// size leave the configured envelope.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const Budget& budget = {});

/// Remainder of full multivariate division: no term of the result is divisible
/// by any basis leading term. normal_form(p) == 0 iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Finitely generated ideal with a per-order Groebner cache (write-once).
class Ideal {
public:
    Ideal() : n_(0) {}
    explicit Ideal(int nvars) : n_(nvars) {}
    Ideal(std::vector<Polynomial> gens, int nvars);

    int nvars() const { return n_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex(),
                                  const Budget& budget = {}) const;
    bool is_unit(const Budget& budget = {}) const;

    /// Stable identity string (rendered reduced grevlex basis); equal strings
    /// mean equal ideals.
    std::string key(const Budget& budget = {}) const;

private:
    int n_;
    std::vector<Polynomial> gens_;
    mutable std::vector<std::shared_ptr<const GroebnerBasis>> cache_;
};

bool membership(const Polynomial& p, const Ideal& ideal, const Budget& budget = {});

/// Every generator of b lies in a (i.e. b is contained in a as an ideal).
bool ideal_contains(const Ideal& a, const Ideal& b, const Budget& budget = {});
bool same_ideal(const Ideal& a, const Ideal& b, const Budget& budget = {});

}  // namespace polyvar
