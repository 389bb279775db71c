#include "polyvar/profile.hpp"

#include <algorithm>

#include "polyvar/combination.hpp"
#include "polyvar/errors.hpp"
#include "polyvar/linalg.hpp"

namespace polyvar {

int DeltaProfile::delta_at(int i) const {
    if (i <= 0) return 0;
    if (i > stages_count()) throw DomainError("delta index beyond n-d is infinite");
    return deltas[static_cast<size_t>(i - 1)];
}

int delta_1(const Variety& v, const Budget& budget, int cap) {
    const int n = v.nvars();
    for (int m = 1; m <= cap; ++m) {
        Int full = binomial(n + m, n);
        if (Int(affine_hilbert(v.ideal, m, budget)) < full) return m;
    }
    throw DegreeBudgetExceeded("delta_1 search cap reached");
}

std::vector<Polynomial> ideal_space_basis(const Ideal& ideal, int m, const Budget& budget) {
    const GroebnerBasis& gb = ideal.groebner(MonomialOrder::grevlex(), budget);
    const int n = ideal.nvars();
    std::vector<Monomial> cols = monomials_up_to(n, m);
    std::map<Monomial, size_t, CanonicalMonomialLess> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);

    Matrix rows;
    for (const auto& g : gb.basis) {
        if (g.is_zero()) continue;
        int dg = g.degree();
        if (dg > m) continue;
        for (const auto& mu : monomials_up_to(n, m - dg)) {
            Polynomial p = g.times_term(mu, Rational(1));
            Row row(cols.size(), Rational(0));
            for (const auto& [mon, c] : p.terms()) row[col_of.at(mon)] = c;
            rows.push_back(std::move(row));
        }
    }
    rref(rows);
    std::vector<Polynomial> basis;
    for (const auto& row : rows) {
        Polynomial p(n);
        bool nonzero = false;
        for (size_t i = 0; i < cols.size(); ++i)
            if (!row[i].is_zero()) {
                p.add_term(cols[i], row[i]);
                nonzero = true;
            }
        if (nonzero) basis.push_back(std::move(p));
    }
    return basis;
}

namespace {

std::vector<ComponentInfo> component_infos(const std::vector<Ideal>& ideals, const Ideal& iv,
                                           const Budget& budget) {
    std::vector<ComponentInfo> out;
    for (const auto& c : ideals) {
        ComponentInfo info;
        if (c.has_generators()) {
            HilbertData dd = dimension_and_degree(c, budget);
            info.dim = dd.dim;
            info.degree = dd.degree;
        } else {
            info.dim = c.nvars();
            info.degree = 1;
        }
        info.contains_v = ideal_contains(iv, c, budget);
        info.ideal = c;
        out.push_back(std::move(info));
    }
    return out;
}

}  // namespace

DeltaProfile delta_profile(const Variety& v, const ProfileOptions& opts) {
    DeltaProfile profile;
    profile.n = v.nvars();
    profile.d = v.dim;
    profile.deg_v = v.degree;
    const int stages = profile.stages_count();
    if (stages <= 0) throw PreconditionViolated("delta_profile needs a proper subvariety");

    profile.certified = true;
    std::vector<Polynomial> tuple_gens;
    std::vector<ComponentInfo> comps;
    {
        ComponentInfo whole;
        whole.ideal = Ideal(v.nvars());
        whole.dim = v.nvars();
        whole.degree = 1;
        whole.contains_v = true;
        comps.push_back(whole);
    }

    for (int i = 1; i <= stages; ++i) {
        StageRecord rec;
        rec.stage = i;

        // Current top-dimensional components containing V.
        int top = -1;
        for (const auto& c : comps)
            if (c.contains_v) top = std::max(top, c.dim);
        std::vector<const ComponentInfo*> targets;
        for (const auto& c : comps)
            if (c.contains_v && c.dim == top) targets.push_back(&c);
        if (top != profile.n - i + 1) profile.certified = false;

        int start = profile.deltas.empty() ? 1 : profile.deltas.back();
        bool placed = false;
        for (int m = start; m <= opts.degree_cap && !placed; ++m) {
            std::vector<Polynomial> basis = ideal_space_basis(v.ideal, m, opts.budget);
            if (basis.empty()) continue;
            bool feasible = true;
            for (const auto* t : targets) {
                bool cuts = false;
                for (const auto& b : basis)
                    if (!membership(b, t->ideal, opts.budget)) {
                        cuts = true;
                        break;
                    }
                if (!cuts) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            std::vector<Ideal> excluded;
            for (const auto* t : targets) excluded.push_back(t->ideal);
            CombinationOptions copts;
            copts.seed = opts.seed + static_cast<uint64_t>(i) * 0x9E37ULL;
            copts.budget = opts.budget;
            Polynomial q = generic_combination(basis, {}, excluded, copts);
            rec.delta = q.degree();
            profile.deltas.push_back(rec.delta);
            profile.tuple.push_back(q);
            tuple_gens.push_back(q);
            placed = true;
        }
        if (!placed) throw DegreeBudgetExceeded("delta_profile stage search cap");

        // Decompose the stage ideal for the next round and the certificates.
        try {
            std::vector<Ideal> parts = split_components(Ideal(tuple_gens, v.nvars()), opts.split);
            rec.decomposed = true;
            rec.components = component_infos(parts, v.ideal, opts.budget);
            int new_top = -1;
            for (const auto& c : rec.components)
                if (c.contains_v) new_top = std::max(new_top, c.dim);
            rec.dimension_ok = (new_top == profile.n - i);
            if (!rec.dimension_ok) profile.certified = false;
            comps = rec.components;
        } catch (const DecompositionIncomplete&) {
            profile.certified = false;
            rec.decomposed = false;
            std::vector<Ideal> single{Ideal(tuple_gens, v.nvars())};
            rec.components = component_infos(single, v.ideal, opts.budget);
            comps = rec.components;
        }
        profile.stages.push_back(std::move(rec));
    }

    profile.big_deltas = big_deltas(profile.deltas, profile.deg_v);
    profile.admissible = admissible_indices(profile.deltas);

    // Minimal-variety witnesses: stage i needs a containing component of
    // dimension n-i whose Hilbert function matches V's for all m < delta_{i+1}.
    for (int i = 1; i <= stages; ++i) {
        StageRecord& rec = profile.stages[static_cast<size_t>(i - 1)];
        if (!rec.decomposed) continue;
        for (size_t ci = 0; ci < rec.components.size(); ++ci) {
            const ComponentInfo& c = rec.components[ci];
            if (!c.contains_v || c.dim != profile.n - i) continue;
            bool witness = true;
            if (i < stages) {
                int bound = profile.deltas[static_cast<size_t>(i)];
                for (int m = 0; m < bound && witness; ++m)
                    if (affine_hilbert(c.ideal, m, opts.budget) !=
                        affine_hilbert(v.ideal, m, opts.budget))
                        witness = false;
            } else {
                witness = same_ideal(c.ideal, v.ideal, opts.budget);
            }
            if (witness) {
                rec.minimal_witness = static_cast<int>(ci);
                break;
            }
        }
    }
    return profile;
}

std::vector<Rational> big_deltas(const std::vector<int>& deltas, long deg_v) {
    const int k = static_cast<int>(deltas.size());
    std::vector<Rational> out;
    for (int i = 0; i <= k; ++i) {
        if (i == k) {
            out.push_back(Rational(Int(deg_v)));
            continue;
        }
        Rational tail(1);
        for (int j = i; j < k; ++j) tail *= Rational(deltas[static_cast<size_t>(j)]);
        Rational val = Rational(Int(deg_v)) / tail;
        out.push_back(val > Rational(1) ? val : Rational(1));
    }
    return out;
}

std::vector<int> admissible_indices(const std::vector<int>& deltas) {
    const int k = static_cast<int>(deltas.size());
    std::vector<int> out;
    for (int i = 0; i <= k; ++i) {
        if (i == 0 || i == k) {  // delta_0 = 0, delta_{k+1} = infinity
            out.push_back(i);
            continue;
        }
        long next = deltas[static_cast<size_t>(i)];
        long cur = deltas[static_cast<size_t>(i - 1)];
        if (next > 2L * i * cur) out.push_back(i);
    }
    return out;
}

IvmResult i_v_of_m(const DeltaProfile& profile, long m_value, const Rational& c0,
                   const Rational& c1) {
    if (m_value < 1) throw PreconditionViolated("i_V(M) needs M >= 1");
    const int k = profile.stages_count();
    Rational m{Int(m_value)};
    for (int i : profile.admissible) {
        int e = profile.n - i;
        Rational lhs = c1 * Rational(profile.delta_at(i)).pow(e);
        Rational mid = m.pow(e);
        bool upper_ok = true;
        if (!profile.delta_is_infinite(i + 1)) {
            Rational rhs = (c0 / Rational(2)) * Rational(profile.delta_at(i + 1)).pow(e);
            upper_ok = mid <= rhs;
        }
        if (lhs <= mid && upper_ok) return {i, false};
    }
    // Interval coverage failed at these constants: largest admissible i with
    // delta_i <= M (0 always qualifies).
    IvmResult res{0, true};
    for (int i : profile.admissible)
        if (i <= k && Rational(profile.delta_at(i)) <= m) res.i = std::max(res.i, i);
    return res;
}

TupleCertificate verify_admissible_tuple(const Variety& v, const DeltaProfile& profile,
                                         const std::vector<Polynomial>& tuple,
                                         const std::vector<Rational>& k_bounds,
                                         const ProfileOptions& opts) {
    TupleCertificate cert;
    const int stages = static_cast<int>(tuple.size());
    std::vector<Polynomial> gens;
    bool all = true;
    for (int i = 1; i <= stages; ++i) {
        TupleStageCheck chk;
        chk.stage = i;
        const Polynomial& q = tuple[static_cast<size_t>(i - 1)];
        gens.push_back(q);
        Rational kb = (static_cast<size_t>(i - 1) < k_bounds.size())
                          ? k_bounds[static_cast<size_t>(i - 1)]
                          : Rational(1);
        chk.degree_ok =
            !q.is_zero() && Rational(q.degree()) <= kb * Rational(profile.delta_at(i));
        chk.membership_ok = membership(q, v.ideal, opts.budget);
        try {
            std::vector<Ideal> parts = split_components(Ideal(gens, v.nvars()), opts.split);
            chk.decomposed = true;
            auto infos = component_infos(parts, v.ideal, opts.budget);
            int top = -1;
            for (const auto& c : infos)
                if (c.contains_v) top = std::max(top, c.dim);
            chk.dimension_ok = (top == profile.n - i);
            for (const auto& c : infos) {
                if (!c.contains_v || c.dim != profile.n - i) continue;
                bool witness = true;
                if (i < profile.stages_count()) {
                    int bound = profile.delta_at(i + 1);
                    for (int m = 0; m < bound && witness; ++m)
                        if (affine_hilbert(c.ideal, m, opts.budget) !=
                            affine_hilbert(v.ideal, m, opts.budget))
                            witness = false;
                } else {
                    witness = same_ideal(c.ideal, v.ideal, opts.budget);
                }
                if (witness) {
                    chk.minimal_ok = true;
                    break;
                }
            }
        } catch (const DecompositionIncomplete&) {
            chk.unknown = true;
        }
        all = all && chk.degree_ok && chk.membership_ok && chk.decomposed && chk.dimension_ok &&
              chk.minimal_ok;
        cert.stages.push_back(chk);
    }
    cert.all_certified = all && stages == profile.stages_count();
    return cert;
}

ConverseBezoutReport converse_bezout_report(const Variety& v, const DeltaProfile& profile) {
    ConverseBezoutReport rep;
    Rational prod(1);
    for (int d : profile.deltas) prod *= Rational(d);
    rep.degree_ratio = Rational(Int(v.degree)) / prod;
    rep.bezu_upper_holds = rep.degree_ratio <= Rational(1) && rep.degree_ratio > Rational(0);
    Rational partial(1);
    for (int i = 1; i <= profile.stages_count(); ++i) {
        partial *= Rational(profile.delta_at(i));
        const StageRecord& rec = profile.stages[static_cast<size_t>(i - 1)];
        for (const auto& c : rec.components)
            if (c.contains_v && c.dim == profile.n - i)
                rep.stage_ratios.emplace_back(i, Rational(Int(c.degree)) / partial);
    }
    return rep;
}

}  // namespace polyvar
