#include "polyvar/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polyvar/errors.hpp"

namespace polyvar {

namespace {

struct OrderGreater {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(b, a); }
};

using WorkMap = std::map<Monomial, Rational, OrderGreater>;

WorkMap to_work(const Polynomial& p, const MonomialOrder& ord) {
    WorkMap w{OrderGreater{&ord}};
    for (const auto& [m, c] : p.terms()) w.emplace(m, c);
    return w;
}

void work_axpy(WorkMap& w, const Polynomial& p, const Monomial& shift, const Rational& scale) {
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m * shift;
        auto it = w.find(mm);
        if (it == w.end()) {
            Rational v = c * scale;
            if (!v.is_zero()) w.emplace(std::move(mm), std::move(v));
        } else {
            it->second += c * scale;
            if (it->second.is_zero()) w.erase(it);
        }
    }
}

Polynomial divide_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& lts, const MonomialOrder& ord) {
    WorkMap work = to_work(p, ord);
    Polynomial rem(p.nvars());
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        Rational c = it->second;
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!lts[k].divides(m)) continue;
            // Basis polynomials are monic: subtract c * (m/LT) * basis[k].
            work_axpy(work, basis[k], lts[k].quotient_of(m), -c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(m, c);
            work.erase(work.begin());
        }
    }
    return rem;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    const Monomial& lf = f.leading_monomial(ord);
    const Monomial& lg = g.leading_monomial(ord);
    Monomial l = lcm(lf, lg);
    Polynomial a = f.times_term(lf.quotient_of(l), f.leading_coeff(ord).inv());
    Polynomial b = g.times_term(lg.quotient_of(l), g.leading_coeff(ord).inv());
    return a - b;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const Budget& budget) {
    std::vector<Polynomial> g;
    for (const auto& p : gens) {
        if (p.is_zero()) continue;
        if (p.degree() > budget.max_degree)
            throw DegreeBudgetExceeded("generator degree " + std::to_string(p.degree()));
        g.push_back(p.monic(order));
    }
    GroebnerBasis out;
    out.order = order;
    out.reduced = true;
    if (g.empty()) return out;

    std::vector<Monomial> lts;
    lts.reserve(g.size());
    for (const auto& p : g) lts.push_back(p.leading_monomial(order));

    // Pair queue under the normal selection strategy: smallest lcm first.
    struct PairLess {
        const MonomialOrder* ord;
        bool operator()(const std::tuple<Monomial, size_t, size_t>& a,
                        const std::tuple<Monomial, size_t, size_t>& b) const {
            const auto& [ma, ia, ja] = a;
            const auto& [mb, ib, jb] = b;
            if (ma != mb) return ord->less(ma, mb);
            if (ia != ib) return ia < ib;
            return ja < jb;
        }
    };
    std::set<std::tuple<Monomial, size_t, size_t>, PairLess> pairs{PairLess{&order}};
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) pairs.insert({lcm(lts[i], lts[j]), i, j});
    };
    for (size_t j = 1; j < g.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        auto [l, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (coprime(lts[i], lts[j])) continue;  // product criterion
        Polynomial s = s_polynomial(g[i], g[j], order);
        Polynomial r = divide_full(s, g, lts, order);
        if (r.is_zero()) continue;
        if (r.degree() > budget.max_degree)
            throw DegreeBudgetExceeded("Groebner intermediate degree " + std::to_string(r.degree()));
        g.push_back(r.monic(order));
        lts.push_back(g.back().leading_monomial(order));
        if (g.size() > budget.max_basis)
            throw DegreeBudgetExceeded("Groebner basis size beyond budget");
        // Unit in the ideal: everything collapses.
        if (lts.back().is_constant()) {
            out.basis = {Polynomial::constant(r.nvars(), Rational(1))};
            return out;
        }
        push_pairs(g.size() - 1);
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<size_t> order_idx(g.size());
    for (size_t i = 0; i < g.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(),
              [&](size_t a, size_t b) { return order.less(lts[a], lts[b]); });
    std::vector<Polynomial> minimal;
    std::vector<Monomial> min_lts;
    for (size_t idx : order_idx) {
        bool redundant = false;
        for (const auto& lt : min_lts)
            if (lt.divides(lts[idx])) {
                redundant = true;
                break;
            }
        if (!redundant) {
            minimal.push_back(g[idx]);
            min_lts.push_back(lts[idx]);
        }
    }
    // Tail-reduce each element against the others for the canonical reduced basis.
    std::vector<Polynomial> reduced;
    for (size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        std::vector<Monomial> others_lt;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j == k) continue;
            others.push_back(minimal[j]);
            others_lt.push_back(min_lts[j]);
        }
        Polynomial r = divide_full(minimal[k], others, others_lt, order);
        reduced.push_back(r.monic(order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    out.basis = std::move(reduced);
    return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (gb.basis.empty()) return p;
    if (p.nvars() != gb.basis[0].nvars()) throw DimensionMismatch("normal_form dimensions");
    std::vector<Monomial> lts;
    lts.reserve(gb.basis.size());
    for (const auto& b : gb.basis) lts.push_back(b.leading_monomial(gb.order));
    return divide_full(p, gb.basis, lts, gb.order);
}

Ideal::Ideal(std::vector<Polynomial> gens, int nvars) : n_(nvars) {
    for (auto& p : gens) {
        if (p.is_zero()) continue;
        if (p.nvars() != nvars) throw DimensionMismatch("ideal generator dimension");
        gens_.push_back(std::move(p));
    }
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order, const Budget& budget) const {
    for (const auto& e : cache_)
        if (e->order.equal_key(order)) return *e;
    auto gb = std::make_shared<GroebnerBasis>(buchberger(gens_, order, budget));
    cache_.push_back(gb);
    return *cache_.back();
}

bool Ideal::is_unit(const Budget& budget) const { return groebner(MonomialOrder::grevlex(), budget).is_unit(); }

std::string Ideal::key(const Budget& budget) const {
    const GroebnerBasis& gb = groebner(MonomialOrder::grevlex(), budget);
    std::string s;
    for (const auto& p : gb.basis) {
        s += p.to_string();
        s += ";";
    }
    return s;
}

bool membership(const Polynomial& p, const Ideal& ideal, const Budget& budget) {
    if (p.is_zero()) return true;
    if (!ideal.has_generators()) return false;
    return normal_form(p, ideal.groebner(MonomialOrder::grevlex(), budget)).is_zero();
}

bool ideal_contains(const Ideal& a, const Ideal& b, const Budget& budget) {
    for (const auto& g : b.generators())
        if (!membership(g, a, budget)) return false;
    return true;
}

bool same_ideal(const Ideal& a, const Ideal& b, const Budget& budget) {
    return ideal_contains(a, b, budget) && ideal_contains(b, a, budget);
}

}  // namespace polyvar
