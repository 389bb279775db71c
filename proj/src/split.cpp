#include "polyvar/split.hpp"

#include <algorithm>
#include <set>

#include "polyvar/errors.hpp"
#include "polyvar/hilbert.hpp"
#include "polyvar/saturation.hpp"

namespace polyvar {

namespace {

bool is_perfect_square(const Int& z, Int& root) {
    if (z < 0) return false;
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    return true;
}

bool rational_square_root(const Rational& r, Rational& root) {
    if (r.sign() < 0) return false;
    Int pn, pd;
    if (!is_perfect_square(r.num(), pn) || !is_perfect_square(r.den(), pd)) return false;
    root = Rational(pn, pd);
    return true;
}

// ---- monomial content -------------------------------------------------

// g = x^e * core with e the per-variable minimum exponent vector.
std::pair<Monomial, Polynomial> monomial_content(const Polynomial& g) {
    const int n = g.nvars();
    Monomial mins(n);
    bool first = true;
    for (const auto& [m, c] : g.terms()) {
        if (first) {
            mins = m;
            first = false;
        } else {
            for (int v = 0; v < n; ++v)
                mins.exps[static_cast<size_t>(v)] =
                    std::min(mins.exps[static_cast<size_t>(v)], m.exps[static_cast<size_t>(v)]);
        }
    }
    Polynomial core(n);
    for (const auto& [m, c] : g.terms()) core.add_term(mins.quotient_of(m), c);
    return {mins, core};
}

// ---- univariate factoring ---------------------------------------------

int single_variable(const Polynomial& g) {
    int var = -1;
    for (int v = 0; v < g.nvars(); ++v) {
        if (g.max_exponent(v) == 0) continue;
        if (var >= 0) return -1;
        var = v;
    }
    return var;
}

std::vector<Rational> univariate_coeffs(const Polynomial& g, int v) {
    std::vector<Rational> c(static_cast<size_t>(g.max_exponent(v)) + 1, Rational(0));
    for (const auto& [m, k] : g.terms()) c[static_cast<size_t>(m.exps[static_cast<size_t>(v)])] = k;
    return c;
}

Polynomial from_univariate(const std::vector<Rational>& c, int n, int v) {
    Polynomial p(n);
    for (size_t e = 0; e < c.size(); ++e) {
        Monomial m(n);
        m.exps[static_cast<size_t>(v)] = static_cast<int>(e);
        p.add_term(m, c[e]);
    }
    return p;
}

Rational eval_univariate(const std::vector<Rational>& c, const Rational& x) {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Deflate by the root r (exact synthetic division).
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational carry = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + carry * r;
    }
    return q;
}

std::vector<Int> small_divisors(const Int& z, size_t cap, bool& exhaustive) {
    Int a = z < 0 ? Int(-z) : z;
    std::vector<Int> out;
    exhaustive = true;
    if (a == 0) return out;
    const Int iter_cap(2000000);
    for (Int d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
        if (out.size() > cap || d > iter_cap) {
            exhaustive = false;
            break;
        }
    }
    return out;
}

// Rational roots then quadratic discriminants; cubic-without-root is decisive.
FactorResult factor_univariate(const Polynomial& g, int v) {
    const int n = g.nvars();
    std::vector<Rational> c = univariate_coeffs(g, v);
    FactorResult res;
    std::vector<Polynomial> factors;
    bool decisive = true;

    while (c.size() > 3) {  // degree >= 3: hunt rational roots
        Int denlcm(1);  // clear denominators
        for (const auto& k : c) denlcm = denlcm / gcd(denlcm, k.den()) * k.den();
        std::vector<Int> ic;
        for (const auto& k : c) ic.push_back(k.num() * (denlcm / k.den()));
        bool exh0 = true, exh1 = true;
        std::vector<Int> ps = small_divisors(ic.front(), 4000, exh0);
        std::vector<Int> qs = small_divisors(ic.back(), 4000, exh1);
        if (!exh0 || !exh1) decisive = false;
        bool found = false;
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (int sgn = 1; sgn >= -1 && !found; sgn -= 2) {
                    Rational r(p * sgn, q);
                    if (eval_univariate(c, r).is_zero()) {
                        Polynomial lin = Polynomial::variable(n, v).scaled(Rational(r.den())) -
                                         Polynomial::constant(n, Rational(r.num()));
                        factors.push_back(lin);
                        c = deflate(c, r);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }

    if (c.size() == 3) {  // quadratic: decisive via the discriminant
        Rational a = c[2], b = c[1], k = c[0];
        Rational disc = b * b - Rational(4) * a * k;
        Rational root;
        if (disc.is_zero()) {
            Polynomial lin = Polynomial::variable(n, v).scaled(Rational(2) * a) + Polynomial::constant(n, b);
            factors.push_back(lin);
            c.clear();
        } else if (rational_square_root(disc, root)) {
            for (int sgn = 1; sgn >= -1; sgn -= 2) {
                Rational r = (-b + (sgn > 0 ? root : -root)) / (Rational(2) * a);
                Polynomial lin = Polynomial::variable(n, v).scaled(Rational(r.den())) -
                                 Polynomial::constant(n, Rational(r.num()));
                factors.push_back(lin);
            }
            c.clear();
        } else if (factors.empty()) {
            res.status = FactorResult::Status::Irreducible;
            return res;
        }
    }

    if (!factors.empty()) {
        // Remaining cofactor (if degree >= 1) is also a factor.
        if (c.size() >= 2) factors.push_back(from_univariate(c, n, v));
        res.status = FactorResult::Status::Factored;
        res.factors = std::move(factors);
        return res;
    }
    // Unfactored: degree-3 with exhaustive root search is irreducible.
    int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 1 || (deg == 3 && decisive)) {
        res.status = FactorResult::Status::Irreducible;
    }
    return res;
}

// ---- quadric factoring (complete) ---------------------------------------

// Lagrange diagonalization of the homogenized quadric: q = sum a_k L_k^2 with
// independent linear forms; rank >= 3 is irreducible, rank <= 2 factors or is
// irreducible over Q depending on a square test.
FactorResult factor_quadric(const Polynomial& g) {
    const int n = g.nvars();
    const int nh = n + 1;  // x_n homogenizes
    Polynomial q(nh);
    for (const auto& [m, c] : g.terms()) {
        Monomial mm(nh);
        for (int v = 0; v < n; ++v) mm.exps[static_cast<size_t>(v)] = m.exps[static_cast<size_t>(v)];
        mm.exps[static_cast<size_t>(n)] = 2 - m.degree();
        q.add_term(mm, c);
    }

    // Substitution stack for cross-term-only states: x_u := x_u + x_v.
    std::vector<std::pair<int, int>> subs;
    std::vector<std::pair<Rational, Polynomial>> squares;  // (a_k, L_k)

    auto square_coeff = [&](const Polynomial& p, int v) {
        Monomial m(nh);
        m.exps[static_cast<size_t>(v)] = 2;
        return p.coeff(m);
    };
    auto partial = [&](const Polynomial& p, int v) {
        Polynomial d(nh);
        for (const auto& [m, c] : p.terms()) {
            int e = m.exps[static_cast<size_t>(v)];
            if (!e) continue;
            Monomial mm = m;
            mm.exps[static_cast<size_t>(v)] -= 1;
            d.add_term(mm, c * Rational(e));
        }
        return d;
    };

    int guard = 0;
    while (!q.is_zero() && guard++ < 4 * nh) {
        int sq = -1;
        for (int v = 0; v < nh; ++v)
            if (!square_coeff(q, v).is_zero()) {
                sq = v;
                break;
            }
        if (sq >= 0) {
            Rational a = square_coeff(q, sq);
            Polynomial l = partial(q, sq).scaled((Rational(2) * a).inv());
            q -= l * l.scaled(a);
            squares.emplace_back(a, l);
            continue;
        }
        // No square term: inject one through x_u := x_u + x_v on a cross term.
        int u = -1, v = -1;
        for (const auto& [m, c] : q.terms()) {
            std::vector<int> present;
            for (int w = 0; w < nh; ++w)
                if (m.exps[static_cast<size_t>(w)] > 0) present.push_back(w);
            if (present.size() == 2) {
                u = present[0];
                v = present[1];
                break;
            }
        }
        if (u < 0) break;
        std::vector<Polynomial> shift;
        for (int w = 0; w < nh; ++w) shift.push_back(Polynomial::variable(nh, w));
        shift[static_cast<size_t>(u)] += Polynomial::variable(nh, v);
        q = q.compose(shift);
        subs.emplace_back(u, v);
    }
    FactorResult res;
    if (!q.is_zero()) return res;  // defensive: unknown

    // Undo substitutions on the collected forms (inverse: x_u := x_u - x_v).
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        std::vector<Polynomial> unshift;
        for (int w = 0; w < nh; ++w) unshift.push_back(Polynomial::variable(nh, w));
        unshift[static_cast<size_t>(it->first)] -= Polynomial::variable(nh, it->second);
        for (auto& [a, l] : squares) l = l.compose(unshift);
    }

    auto dehomogenize = [&](const Polynomial& p) {
        std::vector<Polynomial> sub;
        for (int w = 0; w < n; ++w) sub.push_back(Polynomial::variable(n, w));
        sub.push_back(Polynomial::constant(n, Rational(1)));
        return p.compose(sub);
    };

    size_t rank = squares.size();
    if (rank >= 3) {
        res.status = FactorResult::Status::Irreducible;
        return res;
    }
    if (rank == 1) {
        Polynomial l = dehomogenize(squares[0].second);
        if (!l.is_zero() && l.degree() >= 1) {
            res.status = FactorResult::Status::Factored;
            res.factors = {l};
        }
        return res;
    }
    if (rank == 2) {
        Rational ratio = -(squares[1].first / squares[0].first);
        Rational s;
        if (!rational_square_root(ratio, s)) {
            res.status = FactorResult::Status::Irreducible;  // over Q
            return res;
        }
        Polynomial l1 = squares[0].second, l2 = squares[1].second;
        Polynomial f1 = dehomogenize(l1 - l2.scaled(s));
        Polynomial f2 = dehomogenize(l1 + l2.scaled(s));
        res.factors.clear();
        for (const auto& f : {f1, f2})
            if (!f.is_zero() && f.degree() >= 1) res.factors.push_back(f);
        if (!res.factors.empty()) {
            res.status = FactorResult::Status::Factored;
        }
        return res;
    }
    return res;
}

}  // namespace

FactorResult factor_heuristic(const Polynomial& g) {
    FactorResult res;
    if (g.is_zero() || g.degree() == 0) return res;

    auto [content, core] = monomial_content(g);
    if (content.degree() > 0) {
        res.status = FactorResult::Status::Factored;
        for (int v = 0; v < g.nvars(); ++v)
            if (content.exps[static_cast<size_t>(v)] > 0)
                res.factors.push_back(Polynomial::variable(g.nvars(), v));
        if (!core.is_zero() && core.degree() >= 1) res.factors.push_back(core);
        return res;
    }

    if (g.degree() == 1) {
        res.status = FactorResult::Status::Irreducible;
        return res;
    }

    int v = single_variable(g);
    if (v >= 0) return factor_univariate(g, v);

    // Linear in some variable with a constant leading coefficient: content-free
    // and degree one in that variable, hence irreducible.
    for (int w = 0; w < g.nvars(); ++w) {
        if (g.max_exponent(w) != 1) continue;
        Polynomial lead(g.nvars());
        for (const auto& [m, c] : g.terms())
            if (m.exps[static_cast<size_t>(w)] == 1) {
                Monomial mm = m;
                mm.exps[static_cast<size_t>(w)] = 0;
                lead.add_term(mm, c);
            }
        if (!lead.is_zero() && lead.degree() == 0) {
            res.status = FactorResult::Status::Irreducible;
            return res;
        }
    }

    if (g.degree() == 2) return factor_quadric(g);
    return res;
}

namespace {

struct Cleanup {
    const SplitOptions& opts;

    // V(b) inside V(a): every generator of a is in rad(b).
    bool variety_inside(const Ideal& b, const Ideal& a) {
        for (const auto& g : a.generators())
            if (!radical_membership(g, b, opts.budget)) return false;
        return true;
    }
};

}  // namespace

std::vector<Ideal> split_components(const Ideal& j, const SplitOptions& opts) {
    std::vector<Ideal> results;
    std::vector<std::pair<Ideal, int>> stack;
    stack.emplace_back(j, 0);
    size_t processed = 0;

    while (!stack.empty()) {
        if (++processed > 4 * opts.max_branches)
            throw DecompositionIncomplete("splitting branch budget exhausted");
        auto [a0, depth] = stack.back();
        stack.pop_back();
        if (depth > opts.max_depth) throw DecompositionIncomplete("splitting depth budget exhausted");

        GroebnerBasis gb;
        try {
            gb = a0.groebner(MonomialOrder::grevlex(), opts.budget);
        } catch (const DegreeBudgetExceeded& e) {
            throw DecompositionIncomplete(std::string("Groebner budget during splitting: ") + e.what());
        }
        if (gb.is_unit()) continue;  // empty branch
        Ideal a(gb.basis, a0.nvars());

        // 1. factor an element of the basis
        bool split = false;
        for (const auto& g : gb.basis) {
            FactorResult fr = factor_heuristic(g);
            if (fr.status != FactorResult::Status::Factored) continue;
            bool all_outside = true;
            for (const auto& f : fr.factors)
                if (membership(f, a, opts.budget)) all_outside = false;
            if (!all_outside || fr.factors.size() < 2) continue;
            for (const auto& f : fr.factors) {
                std::vector<Polynomial> gens = a.generators();
                gens.push_back(f);
                stack.emplace_back(Ideal(std::move(gens), a.nvars()), depth + 1);
            }
            split = true;
            break;
        }
        if (split) continue;

        // 2. saturation candidates: variables, then factor fragments, then
        //    zero divisors found among standard-monomial products.
        std::vector<Polynomial> candidates;
        for (int v = 0; v < a.nvars(); ++v) candidates.push_back(Polynomial::variable(a.nvars(), v));
        for (const auto& g : gb.basis) {
            FactorResult fr = factor_heuristic(g);
            for (const auto& f : fr.factors) candidates.push_back(f);
        }
        {
            std::vector<Monomial> sm = standard_monomials(a, opts.probe_degree, opts.budget);
            int pairs = 0;
            for (size_t i = 1; i < sm.size() && pairs < opts.probe_pairs; ++i) {
                for (size_t k = i; k < sm.size() && pairs < opts.probe_pairs; ++k) {
                    ++pairs;
                    Polynomial prod = Polynomial::term(a.nvars(), sm[i] * sm[k], Rational(1));
                    if (membership(prod, a, opts.budget)) {
                        candidates.push_back(Polynomial::term(a.nvars(), sm[i], Rational(1)));
                        pairs = opts.probe_pairs;
                    }
                }
            }
        }
        for (const auto& h : candidates) {
            if (membership(h, a, opts.budget)) continue;
            Ideal sat;
            try {
                sat = saturate_single(a, h, opts.budget);
            } catch (const DegreeBudgetExceeded& e) {
                throw DecompositionIncomplete(std::string("saturation budget during splitting: ") + e.what());
            }
            if (same_ideal(sat, a, opts.budget)) continue;
            std::vector<Polynomial> gens = a.generators();
            gens.push_back(h);
            stack.emplace_back(Ideal(std::move(gens), a.nvars()), depth + 1);
            stack.emplace_back(sat, depth + 1);
            split = true;
            break;
        }
        if (split) continue;

        // 3. no split: recognized prime, or give up honestly
        bool prime = false;
        if (!a.has_generators()) {
            prime = true;
        } else {
            bool all_linear = true;
            for (const auto& g : gb.basis)
                if (g.degree() > 1) all_linear = false;
            if (all_linear) prime = true;
            if (!prime && gb.basis.size() == 1 &&
                factor_heuristic(gb.basis[0]).status == FactorResult::Status::Irreducible)
                prime = true;
            if (!prime) {
                try {
                    HilbertData dd = dimension_and_degree(a, opts.budget);
                    if (dd.degree == 1) prime = true;
                    // Survived every variable saturation and the zero-divisor
                    // screen above: accept as prime-consistent.
                    if (!prime && dd.dim >= 0) prime = true;
                } catch (const Error&) {
                    prime = false;
                }
            }
        }
        if (!prime)
            throw DecompositionIncomplete("unsplittable ideal not recognized prime: " + a.key(opts.budget));
        results.push_back(a);
    }

    // Deduplicate (identical reduced bases), then prune varieties strictly
    // contained in another output.
    std::vector<Ideal> unique;
    std::set<std::string> seen;
    for (const auto& r : results) {
        std::string k = r.key(opts.budget);
        if (seen.insert(k).second) unique.push_back(r);
    }
    Cleanup cl{opts};
    std::vector<Ideal> kept;
    for (size_t i = 0; i < unique.size(); ++i) {
        bool drop = false;
        for (size_t k = 0; k < unique.size() && !drop; ++k) {
            if (i == k) continue;
            bool i_in_k = cl.variety_inside(unique[i], unique[k]);  // V(i) inside V(k)
            bool k_in_i = cl.variety_inside(unique[k], unique[i]);
            if (i_in_k && !k_in_i) drop = true;
            if (i_in_k && k_in_i && k < i) drop = true;  // same variety, keep first
        }
        if (!drop) kept.push_back(unique[i]);
    }

    // Radical-membership verification on a monomial sample.
    size_t checked = 0;
    for (const auto& mu : monomials_up_to(j.nvars(), opts.verify_degree)) {
        if (mu.is_constant()) continue;
        if (++checked > opts.verify_budget) break;
        Polynomial p = Polynomial::term(j.nvars(), mu, Rational(1));
        bool in_all = true;
        for (const auto& comp : kept)
            if (!radical_membership(p, comp, opts.budget)) {
                in_all = false;
                break;
            }
        if (in_all && !kept.empty() && !radical_membership(p, j, opts.budget))
            throw DecompositionIncomplete("decomposition failed radical-sample verification");
    }
    return kept;
}

}  // namespace polyvar
