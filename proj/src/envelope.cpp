#include "polyvar/envelope.hpp"

#include <algorithm>
#include <set>

#include "polyvar/combination.hpp"
#include "polyvar/errors.hpp"
#include "polyvar/saturation.hpp"

namespace polyvar {

namespace {

std::vector<ComponentInfo> decompose_with_info(const std::vector<Polynomial>& gens, const Ideal& iv,
                                               const ProfileOptions& opts) {
    std::vector<Ideal> parts = split_components(Ideal(gens, iv.nvars()), opts.split);
    std::vector<ComponentInfo> out;
    for (const auto& part : parts) {
        ComponentInfo info;
        if (part.has_generators()) {
            HilbertData dd = dimension_and_degree(part, opts.budget);
            info.dim = dd.dim;
            info.degree = dd.degree;
        } else {
            info.dim = part.nvars();
            info.degree = 1;
        }
        info.contains_v = ideal_contains(iv, part, opts.budget);
        info.ideal = part;
        out.push_back(std::move(info));
    }
    return out;
}

// Maximal members under variety inclusion (radical containment).
std::vector<ComponentInfo> prune_to_maximal(std::vector<ComponentInfo> comps,
                                            const Budget& budget) {
    std::set<std::string> seen;
    std::vector<ComponentInfo> unique;
    for (auto& c : comps)
        if (seen.insert(c.ideal.key(budget)).second) unique.push_back(std::move(c));
    auto inside = [&](const ComponentInfo& small, const ComponentInfo& big) {
        for (const auto& g : big.ideal.generators())
            if (!radical_membership(g, small.ideal, budget)) return false;
        return true;
    };
    std::vector<ComponentInfo> kept;
    for (size_t i = 0; i < unique.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < unique.size() && !drop; ++j) {
            if (i == j) continue;
            if (inside(unique[i], unique[j]) && !inside(unique[j], unique[i])) drop = true;
        }
        if (!drop) kept.push_back(unique[i]);
    }
    return kept;
}

}  // namespace

EnvelopeReport envelope(const Variety& v, const std::vector<Polynomial>& tuple,
                        const ProfileOptions& opts) {
    EnvelopeReport rep;
    const int n = v.nvars();
    std::vector<Polynomial> gens;
    Rational bound(1);
    std::vector<ComponentInfo> all_envelope;
    std::vector<std::vector<ComponentInfo>> surfaces_by_stage;
    for (size_t j = 1; j <= tuple.size(); ++j) {
        gens.push_back(tuple[j - 1]);
        bound *= Rational(tuple[j - 1].degree());
        EnvelopeStage stage;
        stage.stage = static_cast<int>(j);
        stage.bezout_degree_bound = bound;
        for (auto& c : decompose_with_info(gens, v.ideal, opts)) {
            if (c.dim == n - static_cast<int>(j)) {
                stage.surface_degree_sum += c.degree;
                stage.surface.push_back(std::move(c));
            } else if (c.dim > n - static_cast<int>(j)) {
                all_envelope.push_back(c);
                stage.envelope.push_back(std::move(c));
            }
        }
        stage.degree_bound_holds = Rational(Int(stage.surface_degree_sum)) <= bound;
        surfaces_by_stage.push_back(stage.surface);
        rep.stages.push_back(std::move(stage));
    }

    rep.envelope_components = prune_to_maximal(std::move(all_envelope), opts.budget);

    // Location lemma: an envelope component of dimension i is a component of
    // the stage-(n-i) surface set.
    rep.location_ok = true;
    for (const auto& w : rep.envelope_components) {
        int j = n - w.dim;
        if (j < 1 || static_cast<size_t>(j) > surfaces_by_stage.size()) {
            rep.location_ok = false;
            continue;
        }
        bool found = false;
        for (const auto& s : surfaces_by_stage[static_cast<size_t>(j - 1)])
            if (same_ideal(s.ideal, w.ideal, opts.budget)) {
                found = true;
                break;
            }
        if (!found) rep.location_ok = false;
    }
    return rep;
}

std::vector<KillerResult> envelope_killers(const Variety& v, const DeltaProfile& profile,
                                           const EnvelopeReport& report,
                                           const ProfileOptions& opts) {
    std::vector<KillerResult> out;
    const int n = v.nvars();
    for (int k = 1; k <= profile.stages_count() - 1; ++k) {
        std::vector<Variety> targets;
        for (const auto& w : report.envelope_components) {
            if (w.dim != n - k) continue;
            Variety t;
            t.ideal = w.ideal;
            t.dim = w.dim;
            t.degree = w.degree;
            targets.push_back(std::move(t));
        }
        if (targets.empty()) continue;

        // Envelope parts of dimension n-k exceed dim(V), so the siegel search
        // runs over the stage-(k-1) minimal variety (dimension n-k+1); pieces
        // outside I(V) then come for free when the tuple has env2 shape, and
        // the avoid-list certifies it in general.
        Variety ambient;
        if (k == 1) {
            ambient.ideal = Ideal(n);
            ambient.dim = n;
            ambient.degree = 1;
        } else {
            const auto& prev = report.stages[static_cast<size_t>(k - 2)].surface;
            const ComponentInfo* pick = nullptr;
            for (const auto& c : prev)
                if (c.contains_v && c.dim == n - k + 1) {
                    bool hilbert_equal = true;
                    for (int m = 0; m < profile.delta_at(k) && hilbert_equal; ++m)
                        if (affine_hilbert(c.ideal, m, opts.budget) !=
                            affine_hilbert(v.ideal, m, opts.budget))
                            hilbert_equal = false;
                    if (hilbert_equal) {
                        pick = &c;
                        break;
                    }
                    if (!pick) pick = &c;
                }
            if (!pick) throw NotFound("no stage minimal variety to host the killer search");
            ambient.ideal = pick->ideal;
            ambient.dim = pick->dim;
            ambient.degree = pick->degree;
        }

        SiegelOptions sopts;
        sopts.budget = opts.budget;
        sopts.avoid = {v.ideal};
        KillerResult kr;
        kr.k = k;
        try {
            SiegelResult sr = vanish_on_varieties(ambient, targets, sopts);
            kr.f = sr.p;
            kr.degree_below_delta_k = sr.degree < profile.delta_at(k);
        } catch (const DegreeBudgetExceeded& e) {
            throw NotFound(std::string("no envelope killer within the degree budget: ") + e.what());
        }
        out.push_back(std::move(kr));
    }
    return out;
}

namespace {

CoverNode build_cover(const Variety& v, const CoverOptions& opts, int depth,
                      std::vector<ComponentInfo>& flattened);

// One eps-biased admissible tuple stage: cut all top-dimensional components
// containing V, avoiding over-threshold unions of the previous surface set.
Polynomial cover_stage_poly(const Variety& v, int stage, int delta_floor,
                            const std::vector<ComponentInfo>& prev_surface,
                            const std::vector<const ComponentInfo*>& targets,
                            const Rational& eps_threshold, const CoverOptions& opts) {
    // Over-threshold unions: intersection ideals of subsets of the previous
    // surface components whose degree sum reaches the threshold.
    std::vector<Ideal> excluded;
    for (const auto* t : targets) excluded.push_back(t->ideal);
    const size_t r = prev_surface.size();
    if (r > 0 && r <= 10) {
        for (size_t mask = 1; mask < (1u << r); ++mask) {
            long degsum = 0;
            for (size_t i = 0; i < r; ++i)
                if (mask & (1u << i)) degsum += prev_surface[i].degree;
            if (Rational(Int(degsum)) < eps_threshold) continue;
            Ideal inter;
            bool first = true;
            for (size_t i = 0; i < r; ++i) {
                if (!(mask & (1u << i))) continue;
                inter = first ? prev_surface[i].ideal
                              : intersect(inter, prev_surface[i].ideal, opts.profile.budget);
                first = false;
            }
            excluded.push_back(inter);
        }
    }
    for (int m = std::max(delta_floor, 1); m <= opts.profile.degree_cap * opts.k_cap; ++m) {
        std::vector<Polynomial> basis = ideal_space_basis(v.ideal, m, opts.profile.budget);
        if (basis.empty()) continue;
        CombinationOptions copts;
        copts.seed = opts.profile.seed + static_cast<uint64_t>(stage) * 0xC0FEULL;
        copts.budget = opts.profile.budget;
        try {
            return generic_combination(basis, {}, excluded, copts);
        } catch (const RetriesExhausted&) {
            continue;  // infeasible at this degree; allow more room
        }
    }
    throw DegreeBudgetExceeded("cover stage found no admissible polynomial");
}

CoverNode build_cover(const Variety& v, const CoverOptions& opts, int depth,
                      std::vector<ComponentInfo>& flattened) {
    if (depth > opts.max_depth) throw RecursionBudgetExceeded("full cover recursion depth");
    CoverNode node;
    node.ideal = v.ideal;
    node.dim = v.dim;
    node.degree = v.degree;

    const int n = v.nvars();
    if (v.dim >= n - 1) {  // base case: the cover of a hypersurface is itself
        ComponentInfo self;
        self.ideal = v.ideal;
        self.dim = v.dim;
        self.degree = v.degree;
        self.contains_v = true;
        flattened.push_back(std::move(self));
        return node;
    }

    const int stages = n - v.dim;
    std::vector<ComponentInfo> comps;
    {
        ComponentInfo whole;
        whole.ideal = Ideal(n);
        whole.dim = n;
        whole.degree = 1;
        whole.contains_v = true;
        comps.push_back(whole);
    }
    std::vector<Polynomial> gens;
    std::vector<ComponentInfo> envelope_parts;
    std::vector<int> achieved;
    Rational eps(1);
    for (int i = 1; i <= stages; ++i) {
        std::vector<const ComponentInfo*> targets;
        int top = -1;
        for (const auto& c : comps)
            if (c.contains_v) top = std::max(top, c.dim);
        for (const auto& c : comps)
            if (c.contains_v && c.dim == top) targets.push_back(&c);

        std::vector<ComponentInfo> prev_surface;
        for (const auto& c : comps)
            if (c.dim == n - (i - 1)) prev_surface.push_back(c);

        Rational threshold = eps;
        for (int jj = 0; jj < i - 1; ++jj)
            threshold *= Rational(achieved[static_cast<size_t>(jj)]);

        int floor_deg = achieved.empty() ? 1 : achieved.back();
        Polynomial q =
            cover_stage_poly(v, i, floor_deg, prev_surface, targets, threshold, opts);
        achieved.push_back(q.degree());
        gens.push_back(q);
        node.tuple.push_back(q);

        comps = decompose_with_info(gens, v.ideal, opts.profile);
        for (const auto& c : comps)
            if (c.dim > n - i) envelope_parts.push_back(c);
        eps *= opts.eps_ratio;
    }

    for (const auto& c : comps)
        if (c.dim == v.dim) flattened.push_back(c);

    for (const auto& w : prune_to_maximal(std::move(envelope_parts), opts.profile.budget)) {
        Variety child;
        child.ideal = w.ideal;
        child.dim = w.dim;
        child.degree = w.degree;
        node.children.push_back(build_cover(child, opts, depth + 1, flattened));
    }
    return node;
}

}  // namespace

FullCover full_cover(const Variety& v, const CoverOptions& opts) {
    FullCover cover;
    std::vector<ComponentInfo> flattened;
    cover.root = build_cover(v, opts, 0, flattened);
    cover.flattened = prune_to_maximal(std::move(flattened), opts.profile.budget);
    for (const auto& c : cover.flattened) cover.degree_sum += c.degree;
    cover.degree_ratio = Rational(Int(cover.degree_sum)) / Rational(Int(std::max<long>(v.degree, 1)));

    // V must be an irreducible component of the flattened union.
    Ideal inter;
    bool first = true;
    for (const auto& c : cover.flattened) {
        inter = first ? c.ideal : intersect(inter, c.ideal, opts.profile.budget);
        first = false;
    }
    cover.v_is_component = !first && is_component(v.ideal, inter, opts.profile.budget);
    return cover;
}

}  // namespace polyvar
