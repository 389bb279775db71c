#include "polyvar/partition.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "polyvar/errors.hpp"
#include "polyvar/linalg.hpp"
#include "polyvar/rng.hpp"
#include "polyvar/siegel.hpp"

namespace polyvar {

namespace {

using Point = std::vector<Rational>;
using PointSets = std::vector<std::vector<Point>>;

struct SearchContext {
    const PointSets& sets;
    int dim;
    bool perturbed = false;

    // Strictly-positive / strictly-negative counts stay within half of each
    // set; in the perturbed pass on-plane points get alternating signs by
    // index (the symbolic tie-break).
    bool valid(const Hyperplane& h) const {
        for (const auto& set : sets) {
            size_t pos = 0, neg = 0, on = 0;
            for (const auto& p : set) {
                int sgn = h.value_at(p).sign();
                if (sgn > 0)
                    ++pos;
                else if (sgn < 0)
                    ++neg;
                else if (perturbed) {
                    if (on % 2 == 0)
                        ++pos;
                    else
                        ++neg;
                    ++on;
                }
            }
            if (2 * pos > set.size() || 2 * neg > set.size()) return false;
        }
        return true;
    }
};

// Floating-point shadow of the search used only to pre-screen candidates in
// the sampled phases. A candidate is skipped only when its float counts are
// clearly hopeless (margin-certain strict majorities); every accepted
// hyperplane is re-derived and verified in exact arithmetic, and the
// systematic completeness sweep never consults the filter.
struct FloatShadow {
    std::vector<std::vector<std::vector<double>>> sets;
    double scale = 1.0;

    static FloatShadow of(const PointSets& exact) {
        FloatShadow fs;
        for (const auto& set : exact) {
            std::vector<std::vector<double>> fset;
            for (const auto& p : set) {
                std::vector<double> fp;
                for (const auto& c : p) {
                    double v = c.to_double();
                    fp.push_back(v);
                    fs.scale = std::max(fs.scale, std::fabs(v));
                }
                fset.push_back(std::move(fp));
            }
            fs.sets.push_back(std::move(fset));
        }
        return fs;
    }

    // Nullspace direction of the candidate rows via Gaussian elimination.
    static bool solve(std::vector<std::vector<double>> m, size_t cols, std::vector<double>& out) {
        size_t r = 0;
        std::vector<size_t> pivots;
        for (size_t c = 0; c < cols && r < m.size(); ++c) {
            size_t best = r;
            double mag = 0;
            for (size_t i = r; i < m.size(); ++i)
                if (std::fabs(m[i][c]) > mag) {
                    mag = std::fabs(m[i][c]);
                    best = i;
                }
            if (mag < 1e-12) continue;
            std::swap(m[r], m[best]);
            double inv = 1.0 / m[r][c];
            for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
            for (size_t i = 0; i < m.size(); ++i) {
                if (i == r) continue;
                double f = m[i][c];
                if (f == 0) continue;
                for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(cols, false);
        for (size_t c : pivots) is_pivot[c] = true;
        size_t free_col = cols;
        for (size_t c = 0; c < cols; ++c)
            if (!is_pivot[c]) {
                free_col = c;
                break;
            }
        if (free_col == cols) return false;
        out.assign(cols, 0.0);
        out[free_col] = 1.0;
        for (size_t i = 0; i < pivots.size(); ++i) out[pivots[i]] = -m[i][free_col];
        for (double v : out)
            if (!std::isfinite(v)) return false;
        return true;
    }

    // False only when the candidate is margin-certainly invalid.
    bool plausible(const std::vector<double>& hyperplane) const {
        double margin = 1e-9 * scale * static_cast<double>(hyperplane.size());
        double hmag = 0;
        for (double v : hyperplane) hmag = std::max(hmag, std::fabs(v));
        margin *= std::max(hmag, 1.0);
        for (const auto& set : sets) {
            size_t pos_sure = 0, neg_sure = 0;
            for (const auto& p : set) {
                double val = hyperplane.back();
                for (size_t j = 0; j + 1 < hyperplane.size(); ++j) val += hyperplane[j] * p[j];
                if (val > margin) ++pos_sure;
                if (val < -margin) ++neg_sure;
            }
            if (2 * pos_sure > set.size() || 2 * neg_sure > set.size()) return false;
        }
        return true;
    }
};

/// Hyperplanes through the given points, with the listed coordinate
/// directions forced into the hyperplane (degenerate completions). One
/// candidate per nullspace basis vector.
std::vector<Hyperplane> spanned_candidates(const std::vector<const Point*>& pts,
                                           const std::vector<int>& axes, int dim) {
    Matrix m;
    for (const Point* p : pts) {
        Row row;
        row.reserve(static_cast<size_t>(dim) + 1);
        for (const auto& c : *p) row.push_back(c);
        row.push_back(Rational(1));
        m.push_back(std::move(row));
    }
    for (int a : axes) {
        Row row(static_cast<size_t>(dim) + 1, Rational(0));
        row[static_cast<size_t>(a)] = Rational(1);
        m.push_back(std::move(row));
    }
    Matrix ns = nullspace(m, static_cast<size_t>(dim) + 1);
    std::vector<Hyperplane> out;
    for (const auto& v : ns) {
        Hyperplane h;
        h.normal.assign(v.begin(), v.end() - 1);
        h.offset = v.back();
        bool nontrivial = !h.offset.is_zero();
        for (const auto& c : h.normal) nontrivial = nontrivial || !c.is_zero();
        if (nontrivial) out.push_back(std::move(h));
    }
    return out;
}

struct FlatIndex {
    size_t set, idx;
};

class CandidateSearch {
public:
    CandidateSearch(const PointSets& sets, int dim, const HamSandwichOptions& opts)
        : sets_(sets), dim_(dim), opts_(opts), shadow_(FloatShadow::of(sets)) {
        for (size_t s = 0; s < sets.size(); ++s)
            for (size_t i = 0; i < sets[s].size(); ++i) flat_.push_back({s, i});
    }

    std::optional<Hyperplane> run(bool perturbed) {
        SearchContext ctx{sets_, dim_, perturbed};
        // The float shadow only helps the unperturbed hunt; perturbed counting
        // depends on exact zeros.
        bool filter = !perturbed;
        if (auto h = phase_median_descent(ctx)) return h;
        if (auto h = phase_one_per_set(ctx, filter)) return h;
        if (auto h = phase_sampled_subsets(ctx, filter)) return h;
        if (auto h = phase_degenerate(ctx)) return h;
        if (auto h = phase_full_sweep(ctx)) return h;
        return std::nullopt;
    }

private:
    const Point& at(const FlatIndex& f) const { return sets_[f.set][f.idx]; }
    const std::vector<double>& fat(const FlatIndex& f) const { return shadow_.sets[f.set][f.idx]; }

    bool float_implausible(const std::vector<size_t>& pick) const {
        std::vector<std::vector<double>> m;
        const size_t cols = static_cast<size_t>(dim_) + 1;
        for (size_t i : pick) {
            std::vector<double> row = fat(flat_[i]);
            row.push_back(1.0);
            m.push_back(std::move(row));
        }
        std::vector<double> cand;
        if (!FloatShadow::solve(std::move(m), cols, cand)) return false;  // let exact decide
        return !shadow_.plausible(cand);
    }

    std::optional<Hyperplane> check_indices(const SearchContext& ctx,
                                            const std::vector<size_t>& pick,
                                            const std::vector<int>& axes) const {
        std::vector<const Point*> pts;
        pts.reserve(pick.size());
        for (size_t i : pick) pts.push_back(&at(flat_[i]));
        for (auto& h : spanned_candidates(pts, axes, dim_))
            if (ctx.valid(h)) return h;
        return std::nullopt;
    }

    // Iterated re-medianing: a hyperplane through the median point of every
    // set (w.r.t. its own functional ordering) bisects all of them, so chase
    // that fixed point in the float shadow and hand each stabilized selection
    // to the exact spanned-candidate check. Simultaneous-validity density
    // among blind spanned candidates decays like a product over the sets;
    // this guided ordering is what makes large rounds tractable.
    std::optional<Hyperplane> phase_median_descent(const SearchContext& ctx) const {
        const size_t k = sets_.size();
        if (static_cast<int>(k) != dim_) return std::nullopt;
        std::vector<size_t> base(k);
        {
            size_t off = 0;
            for (size_t s = 0; s < k; ++s) {
                base[s] = off;
                off += sets_[s].size();
            }
        }
        const size_t cols = static_cast<size_t>(dim_) + 1;
        Rng seed_rng(opts_.seed ^ 0x3E3DULL);
        for (int restart = 0; restart < 400; ++restart) {
            std::vector<double> h(cols);
            for (auto& x : h) x = static_cast<double>(seed_rng.int_in(-1000, 1000));
            std::vector<size_t> prev;
            std::vector<size_t> picks(k);
            bool fixed = false;
            for (int iter = 0; iter < 80; ++iter) {
                for (size_t s = 0; s < k; ++s) {
                    const auto& fset = shadow_.sets[s];
                    std::vector<std::pair<double, size_t>> vals;
                    vals.reserve(fset.size());
                    for (size_t i = 0; i < fset.size(); ++i) {
                        double v = h.back();
                        for (size_t j = 0; j + 1 < cols; ++j) v += h[j] * fset[i][j];
                        vals.emplace_back(v, i);
                    }
                    std::sort(vals.begin(), vals.end());
                    picks[s] = base[s] + vals[(fset.size() + 1) / 2 - 1].second;
                }
                std::vector<std::vector<double>> m;
                for (size_t s = 0; s < k; ++s) {
                    std::vector<double> row = fat(flat_[picks[s]]);
                    row.push_back(1.0);
                    m.push_back(std::move(row));
                }
                std::vector<double> hn;
                if (!FloatShadow::solve(std::move(m), cols, hn)) break;
                double dot = 0;
                for (size_t j = 0; j < cols; ++j) dot += hn[j] * h[j];
                if (dot < 0)
                    for (auto& x : hn) x = -x;
                h = std::move(hn);
                if (picks == prev) {
                    fixed = true;
                    break;
                }
                prev = picks;
            }
            if (!fixed && restart % 4 != 3) continue;  // exact-check every stall too, sparsely
            if (auto res = check_indices(ctx, picks, {})) return res;
        }
        return std::nullopt;
    }

    // One point from each set (candidates most likely to straddle medians).
    std::optional<Hyperplane> phase_one_per_set(const SearchContext& ctx, bool filter) const {
        const size_t k = sets_.size();
        if (static_cast<int>(k) != dim_) return std::nullopt;
        std::vector<size_t> base(k);  // flat offset of each set
        {
            size_t off = 0;
            for (size_t s = 0; s < k; ++s) {
                base[s] = off;
                off += sets_[s].size();
            }
        }
        uint64_t total = 1;
        bool overflow = false;
        for (const auto& s : sets_) {
            if (total > opts_.phase_a_cap / std::max<size_t>(s.size(), 1)) overflow = true;
            total *= static_cast<uint64_t>(s.size());
        }
        Rng rng(opts_.seed ^ 0xA11CEULL);
        size_t budget = std::min<uint64_t>(overflow ? opts_.phase_a_cap : total, opts_.phase_a_cap);
        for (size_t c = 0; c < budget; ++c) {
            std::vector<size_t> pick;
            pick.reserve(k);
            if (!overflow) {
                // exhaustive mixed-radix, seed-shuffled by an affine skip
                uint64_t idx = (c * 0x9E3779B97F4A7C15ULL + opts_.seed) % total;
                for (size_t s = 0; s < k; ++s) {
                    pick.push_back(base[s] + static_cast<size_t>(idx % sets_[s].size()));
                    idx /= sets_[s].size();
                }
            } else {
                for (size_t s = 0; s < k; ++s)
                    pick.push_back(base[s] + static_cast<size_t>(rng.below(sets_[s].size())));
            }
            if (filter && float_implausible(pick)) continue;
            if (auto h = check_indices(ctx, pick, {})) return h;
        }
        return std::nullopt;
    }

    std::optional<Hyperplane> phase_sampled_subsets(const SearchContext& ctx, bool filter) const {
        const size_t n = flat_.size();
        const size_t d = static_cast<size_t>(dim_);
        if (n < d) return std::nullopt;
        Rng rng(opts_.seed ^ 0xB0B5ULL);
        for (size_t c = 0; c < opts_.phase_b_cap; ++c) {
            std::vector<size_t> pick;
            while (pick.size() < d) {
                size_t i = static_cast<size_t>(rng.below(n));
                if (std::find(pick.begin(), pick.end(), i) == pick.end()) pick.push_back(i);
            }
            if (filter && float_implausible(pick)) continue;
            if (auto h = check_indices(ctx, pick, {})) return h;
        }
        return std::nullopt;
    }

    // Fewer spanning points, completed by coordinate directions.
    std::optional<Hyperplane> phase_degenerate(const SearchContext& ctx) const {
        const size_t n = flat_.size();
        for (int r = dim_ - 1; r >= 1; --r) {
            size_t subset_cap = 20000;
            std::vector<size_t> idx(static_cast<size_t>(r));
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            if (n < idx.size()) continue;
            size_t seen = 0;
            while (seen++ < subset_cap) {
                // all (dim - r)-subsets of axes
                std::vector<int> axes(static_cast<size_t>(dim_ - r));
                for (size_t i = 0; i < axes.size(); ++i) axes[i] = static_cast<int>(i);
                while (true) {
                    if (auto h = check_indices(ctx, idx, axes)) return h;
                    int pos = static_cast<int>(axes.size()) - 1;
                    while (pos >= 0 &&
                           axes[static_cast<size_t>(pos)] ==
                               dim_ - static_cast<int>(axes.size()) + pos)
                        --pos;
                    if (pos < 0) break;
                    ++axes[static_cast<size_t>(pos)];
                    for (size_t i = static_cast<size_t>(pos) + 1; i < axes.size(); ++i)
                        axes[i] = axes[i - 1] + 1;
                }
                // next lexicographic subset
                int pos = r - 1;
                while (pos >= 0 &&
                       idx[static_cast<size_t>(pos)] == n - static_cast<size_t>(r - pos)) --pos;
                if (pos < 0) break;
                ++idx[static_cast<size_t>(pos)];
                for (size_t i = static_cast<size_t>(pos) + 1; i < static_cast<size_t>(r); ++i)
                    idx[i] = idx[i - 1] + 1;
            }
        }
        return std::nullopt;
    }

    // Systematic lexicographic sweep over all dim-subsets: completeness, fully
    // exact (no float screening here).
    std::optional<Hyperplane> phase_full_sweep(const SearchContext& ctx) const {
        const size_t n = flat_.size();
        const size_t d = static_cast<size_t>(dim_);
        if (n < d) return std::nullopt;
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        size_t seen = 0;
        while (true) {
            if (opts_.full_sweep_cap && ++seen > opts_.full_sweep_cap) return std::nullopt;
            if (auto h = check_indices(ctx, idx, {})) return h;
            int pos = static_cast<int>(d) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - (d - static_cast<size_t>(pos)))
                --pos;
            if (pos < 0) return std::nullopt;
            ++idx[static_cast<size_t>(pos)];
            for (size_t i = static_cast<size_t>(pos) + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }
    }

    const PointSets& sets_;
    int dim_;
    HamSandwichOptions opts_;
    FloatShadow shadow_;
    std::vector<FlatIndex> flat_;
};

}  // namespace

Hyperplane discrete_ham_sandwich(const PointSets& sets, const HamSandwichOptions& opts) {
    if (sets.empty()) throw PreconditionViolated("ham-sandwich needs at least one set");
    const int t = static_cast<int>(sets[0][0].size());
    const int k = static_cast<int>(sets.size());
    for (const auto& s : sets) {
        if (s.empty()) throw PreconditionViolated("ham-sandwich set is empty");
        for (const auto& p : s)
            if (static_cast<int>(p.size()) != t) throw DimensionMismatch("lifted point dimension");
    }
    if (k > t) throw PreconditionViolated("more sets than lifted dimensions");

    // Work in R^k: a bisector of the projected multisets pulls back exactly.
    PointSets work = sets;
    Matrix proj;  // k x t
    bool projected = false;
    if (k < t) {
        Rng rng(opts.seed ^ 0x9D5AULL);
        for (int attempt = 0; attempt < 64; ++attempt) {
            proj.assign(static_cast<size_t>(k), Row(static_cast<size_t>(t), Rational(0)));
            for (auto& row : proj)
                for (auto& e : row) e = Rational(rng.int_in(-4, 4));
            if (rank(proj) == static_cast<size_t>(k)) break;
            proj.clear();
        }
        if (proj.empty()) throw HamSandwichNotFound("no full-rank projection found");
        projected = true;
        for (auto& s : work)
            for (auto& p : s) {
                Point q(static_cast<size_t>(k), Rational(0));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < t; ++j)
                        q[static_cast<size_t>(i)] +=
                            proj[static_cast<size_t>(i)][static_cast<size_t>(j)] * p[static_cast<size_t>(j)];
                p = std::move(q);
            }
    }

    CandidateSearch search(work, k, opts);
    std::optional<Hyperplane> found = search.run(false);
    if (!found) found = search.run(true);  // symbolic perturbation pass
    if (!found) throw HamSandwichNotFound("exhausted spanned-hyperplane candidates");

    Hyperplane h = *found;
    if (projected) {
        Hyperplane lift;
        lift.normal.assign(static_cast<size_t>(t), Rational(0));
        lift.offset = h.offset;
        for (int j = 0; j < t; ++j)
            for (int i = 0; i < k; ++i)
                lift.normal[static_cast<size_t>(j)] +=
                    proj[static_cast<size_t>(i)][static_cast<size_t>(j)] * h.normal[static_cast<size_t>(i)];
        h = std::move(lift);
    }
    return h;
}

BisectResult bisect_sets(const Variety& v, const std::vector<std::vector<RationalPoint>>& sets,
                         int m, const HamSandwichOptions& opts, const Budget& budget) {
    const size_t k = sets.size();
    long h_m = affine_hilbert(v.ideal, m, budget);
    if (!(static_cast<long>(k) < h_m))
        throw PreconditionViolated("bisect_sets needs #sets < H(m)");
    std::vector<Monomial> sm = standard_monomials(v.ideal, m, budget);
    // sm[0] is the constant; the rest give the lifting map, the constant the offset.
    std::vector<Polynomial> reps;
    for (size_t i = 1; i < sm.size(); ++i)
        reps.push_back(Polynomial::term(v.nvars(), sm[i], Rational(1)));
    const int t = static_cast<int>(reps.size());

    PointSets lifted(k);
    for (size_t s = 0; s < k; ++s)
        for (const auto& p : sets[s]) {
            Point y;
            y.reserve(static_cast<size_t>(t));
            for (const auto& q : reps) y.push_back(q.evaluate(p));
            lifted[s].push_back(std::move(y));
        }

    Hyperplane hp = discrete_ham_sandwich(lifted, opts);

    Polynomial g = Polynomial::constant(v.nvars(), hp.offset);
    for (size_t j = 0; j < reps.size(); ++j)
        if (!hp.normal[j].is_zero()) g += reps[j].scaled(hp.normal[j]);

    if (g.is_zero() || membership(g, v.ideal, budget))
        throw HamSandwichNotFound("pulled-back bisector vanished on V");
    // Exact verification in the original space.
    for (const auto& set : sets) {
        size_t pos = 0, neg = 0;
        for (const auto& p : set) {
            int sgn = g.evaluate(p).sign();
            if (sgn > 0) ++pos;
            if (sgn < 0) ++neg;
        }
        if (2 * pos > set.size() || 2 * neg > set.size())
            throw HamSandwichNotFound("bisector failed exact recount");
    }
    BisectResult res;
    res.g = std::move(g);
    res.lifted = std::move(hp);
    res.m = m;
    res.lifted_dim = t;
    return res;
}

std::vector<int> chain_signs(const BisectorChain& chain, const RationalPoint& p) {
    std::vector<int> signs;
    for (const auto& h : chain.rounds) {
        int sgn = h.evaluate(p).sign();
        signs.push_back(sgn);
        if (sgn == 0) break;
    }
    return signs;
}

std::pair<BisectorChain, PartitionReport> partition(const Variety& v, const DeltaProfile& profile,
                                                    const std::vector<RationalPoint>& s, long m_value,
                                                    const PartitionOptions& opts) {
    if (m_value < 1) throw PreconditionViolated("partition needs M >= 1");
    PartitionReport report;
    IvmResult ivm = i_v_of_m(profile, m_value, opts.constants.c0, opts.constants.c1);
    report.i_v = ivm.i;
    report.i_v_fallback = ivm.fallback;
    int exp = v.nvars() - ivm.i;
    report.r_target = Rational(Int(m_value)).pow(exp) * profile.big_deltas[static_cast<size_t>(ivm.i)];

    size_t rounds_target = 0;
    {
        Rational pow2(1);
        while (pow2 < report.r_target) {
            pow2 *= Rational(2);
            ++rounds_target;
        }
    }
    if (rounds_target > opts.max_rounds)
        throw RoundBudgetExceeded("partition target needs too many rounds");

    BisectorChain chain;
    std::vector<std::vector<int>> signs(s.size());  // per point; 0 = on a zero set
    std::vector<bool> active(s.size(), true);

    for (size_t round = 1; round <= rounds_target; ++round) {
        // Current nonempty sign classes among active points.
        std::map<std::vector<int>, std::vector<size_t>> classes;
        for (size_t i = 0; i < s.size(); ++i)
            if (active[i]) classes[signs[i]].push_back(i);
        size_t max_class = 0;
        for (const auto& [key, members] : classes) max_class = std::max(max_class, members.size());
        if (max_class <= 1) break;  // nothing left to bisect

        size_t k = classes.size();
        int m = -1;
        for (int cand = 1; cand <= 64; ++cand)
            if (affine_hilbert(v.ideal, cand, opts.budget) > static_cast<long>(k)) {
                m = cand;
                break;
            }
        if (m < 0) throw RoundBudgetExceeded("no feasible quotient degree for this round");

        std::vector<std::vector<RationalPoint>> sets;
        for (const auto& [key, members] : classes) {
            std::vector<RationalPoint> pts;
            for (size_t i : members) pts.push_back(s[i]);
            sets.push_back(std::move(pts));
        }
        HamSandwichOptions hs = opts.hs;
        hs.seed = opts.hs.seed + round * 0x5bd1e995ULL;
        BisectResult bis = bisect_sets(v, sets, m, hs, opts.budget);
        chain.rounds.push_back(bis.g);

        RoundCensus census;
        census.bisector_degree = bis.g.degree();
        census.quotient_degree = m;
        for (size_t i = 0; i < s.size(); ++i) {
            if (!active[i]) continue;
            int sgn = bis.g.evaluate(s[i]).sign();
            signs[i].push_back(sgn);
            if (sgn == 0) active[i] = false;
        }
        size_t on_zero = 0;
        for (size_t i = 0; i < s.size(); ++i)
            if (!active[i]) ++on_zero;
        census.on_zero_set = on_zero;
        for (size_t i = 0; i < s.size(); ++i)
            if (active[i]) census.class_sizes[signs[i]]++;
        for (const auto& [key, count] : census.class_sizes)
            census.max_class = std::max(census.max_class, count);
        report.census.push_back(std::move(census));
        report.total_degree += bis.g.degree();
        ++report.rounds;
    }
    report.final_max_class = report.census.empty() ? s.size() : report.census.back().max_class;
    report.degree_over_m = Rational(report.total_degree) / Rational(Int(m_value));
    return {chain, report};
}

}  // namespace polyvar
