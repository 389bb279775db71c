#include "polyvar/saturation.hpp"

#include "polyvar/errors.hpp"

namespace polyvar {

namespace {

// Lex with the auxiliary (last) variable most significant is an elimination
// order for it.
MonomialOrder elimination_order(int nvars_ext) {
    std::vector<int> perm;
    perm.push_back(nvars_ext - 1);
    for (int i = 0; i < nvars_ext - 1; ++i) perm.push_back(i);
    return MonomialOrder::lex_with(std::move(perm));
}

bool uses_last_var(const Polynomial& p) {
    return p.max_exponent(p.nvars() - 1) > 0;
}

}  // namespace

Ideal eliminate_last(const std::vector<Polynomial>& gens, int nvars_ext, const Budget& budget) {
    GroebnerBasis gb = buchberger(gens, elimination_order(nvars_ext), budget);
    std::vector<Polynomial> kept;
    for (const auto& p : gb.basis)
        if (!uses_last_var(p)) kept.push_back(p.with_nvars(nvars_ext - 1));
    return Ideal(std::move(kept), nvars_ext - 1);
}

Ideal saturate_single(const Ideal& j, const Polynomial& f, const Budget& budget) {
    const int n = j.nvars();
    std::vector<Polynomial> ext;
    for (const auto& g : j.generators()) ext.push_back(g.with_nvars(n + 1));
    Polynomial one_minus_yf = Polynomial::constant(n + 1, Rational(1)) -
                              Polynomial::variable(n + 1, n) * f.with_nvars(n + 1);
    ext.push_back(one_minus_yf);
    return eliminate_last(ext, n + 1, budget);
}

// J : K^inf = the intersection over generators k of J : k^inf (pigeonhole on
// powers); saturation is idempotent, so one pass plus a stability check is
// enough.
Ideal saturate(const Ideal& j, const Ideal& k, const Budget& budget) {
    if (!k.has_generators()) return j;  // K = (0): nothing to remove
    Ideal acc;
    bool first = true;
    for (const auto& f : k.generators()) {
        if (f.is_zero()) continue;
        Ideal single = saturate_single(j, f, budget);
        acc = first ? single : intersect(acc, single, budget);
        first = false;
    }
    return first ? j : acc;
}

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget) {
    const int n = a.nvars();
    if (b.nvars() != n) throw DimensionMismatch("ideal intersection dimensions");
    Polynomial t = Polynomial::variable(n + 1, n);
    Polynomial one_minus_t = Polynomial::constant(n + 1, Rational(1)) - t;
    std::vector<Polynomial> ext;
    for (const auto& g : a.generators()) ext.push_back(t * g.with_nvars(n + 1));
    for (const auto& g : b.generators()) ext.push_back(one_minus_t * g.with_nvars(n + 1));
    return eliminate_last(ext, n + 1, budget);
}

bool radical_membership(const Polynomial& p, const Ideal& j, const Budget& budget) {
    if (p.is_zero()) return true;
    const int n = j.nvars();
    std::vector<Polynomial> ext;
    for (const auto& g : j.generators()) ext.push_back(g.with_nvars(n + 1));
    ext.push_back(Polynomial::constant(n + 1, Rational(1)) -
                  Polynomial::variable(n + 1, n) * p.with_nvars(n + 1));
    GroebnerBasis gb = buchberger(ext, MonomialOrder::grevlex(), budget);
    return gb.is_unit();
}

bool is_component(const Ideal& v_ideal, const Ideal& j, const Budget& budget) {
    for (const auto& g : j.generators())
        if (!membership(g, v_ideal, budget))
            throw PreconditionViolated("is_component requires J inside I(V)");
    Ideal sat = saturate(j, v_ideal, budget);
    for (const auto& g : sat.generators())
        if (!membership(g, v_ideal, budget)) return true;
    return false;
}

}  // namespace polyvar
