#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "polyvar/errors.hpp"

namespace polyvar {

/// Exponent vector of length n (the ambient dimension). Variables are x0..x{n-1}.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int n) : exps(static_cast<size_t>(n), 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_constant() const { return degree() == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
        return r;
    }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > m.exps[i]) return false;
        return true;
    }

    /// Quotient m / this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& m) const {
        Monomial r = m;
        for (size_t i = 0; i < exps.size(); ++i) r.exps[i] -= exps[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.exps.size(); ++i)
            if (b.exps[i] > r.exps[i]) r.exps[i] = b.exps[i];
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] > 0 && b.exps[i] > 0) return false;
        return true;
    }
};

enum class OrderKind : uint8_t { Grevlex, Lex };

/// Term order. Grevlex refines total degree (required for affine Hilbert
/// computations); the permutation lists variables from most to least
/// significant (empty = identity, x0 > x1 > ... > x{n-1}).
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<int> perm;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder lex_with(std::vector<int> p) { return {OrderKind::Lex, std::move(p)}; }

    bool is_graded() const { return kind == OrderKind::Grevlex; }

    int var_at(int pos, int n) const { return perm.empty() ? pos : perm[static_cast<size_t>(pos)]; }

    bool less(const Monomial& a, const Monomial& b) const {
        const int n = a.nvars();
        if (kind == OrderKind::Grevlex) {
            int da = a.degree(), db = b.degree();
            if (da != db) return da < db;
            for (int pos = n - 1; pos >= 0; --pos) {
                int v = var_at(pos, n);
                if (a.exps[static_cast<size_t>(v)] != b.exps[static_cast<size_t>(v)])
                    return a.exps[static_cast<size_t>(v)] > b.exps[static_cast<size_t>(v)];
            }
            return false;
        }
        for (int pos = 0; pos < n; ++pos) {
            int v = var_at(pos, n);
            if (a.exps[static_cast<size_t>(v)] != b.exps[static_cast<size_t>(v)])
                return a.exps[static_cast<size_t>(v)] < b.exps[static_cast<size_t>(v)];
        }
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
    bool equal_key(const MonomialOrder& o) const { return kind == o.kind && perm == o.perm; }
};

/// Canonical storage order for polynomial terms: grevlex, identity permutation.
struct CanonicalMonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        static const MonomialOrder ord = MonomialOrder::grevlex();
        return ord.less(a, b);
    }
};

}  // namespace polyvar
