#include "polyvar/incidence.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "polyvar/errors.hpp"
#include "polyvar/linalg.hpp"
#include "polyvar/siegel.hpp"

namespace polyvar {

IncidenceStructure IncidenceStructure::build(std::vector<RationalPoint> points,
                                             std::vector<Polynomial> hypersurfaces) {
    IncidenceStructure st;
    st.points = std::move(points);
    st.hypersurfaces = std::move(hypersurfaces);
    st.matrix.assign(st.points.size(), std::vector<bool>(st.hypersurfaces.size(), false));
    for (size_t i = 0; i < st.points.size(); ++i)
        for (size_t j = 0; j < st.hypersurfaces.size(); ++j)
            st.matrix[i][j] = st.hypersurfaces[j].evaluate(st.points[i]).is_zero();
    for (const auto& t : st.hypersurfaces) st.deg_t_sum += t.degree_or(0);
    return st;
}

long count_incidences(const IncidenceStructure& st) {
    long by_points = 0, by_surfaces = 0;
    for (const auto& row : st.matrix)
        for (bool v : row)
            if (v) ++by_points;
    for (size_t j = 0; j < st.hypersurfaces.size(); ++j)
        for (size_t i = 0; i < st.points.size(); ++i)
            if (st.matrix[i][j]) ++by_surfaces;
    if (by_points != by_surfaces)
        throw PreconditionViolated("incidence marginal sums disagree");
    return by_points;
}

FreenessWitness check_kb_free(const IncidenceStructure& st, const FreenessParams& params,
                              int b_budget) {
    if (params.k < 1 || params.b < 1) throw PreconditionViolated("freeness parameters");
    if (params.b > b_budget) throw BudgetExceeded("b beyond the subset enumeration budget");
    const size_t nt = st.hypersurfaces.size();
    FreenessWitness w;
    if (nt < static_cast<size_t>(params.b)) return w;
    std::vector<size_t> idx(static_cast<size_t>(params.b));
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
        std::vector<size_t> common;
        for (size_t p = 0; p < st.points.size(); ++p) {
            bool in_all = true;
            for (size_t j : idx)
                if (!st.matrix[p][j]) {
                    in_all = false;
                    break;
                }
            if (in_all) common.push_back(p);
        }
        if (common.size() >= static_cast<size_t>(params.k)) {
            w.free = false;
            w.points.assign(common.begin(), common.begin() + params.k);
            w.hypersurfaces = idx;
            return w;
        }
        int pos = params.b - 1;
        while (pos >= 0 &&
               idx[static_cast<size_t>(pos)] ==
                   nt - static_cast<size_t>(params.b - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (size_t i = static_cast<size_t>(pos) + 1; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
    }
    return w;
}

Rational alpha_exponent(int k, int d) {
    if (k == 1 && d == 1) return Rational(0);
    return Rational(Int(static_cast<long>(k) * (d - 1)), Int(static_cast<long>(d) * k - 1));
}

Rational beta_exponent(int k, int d) {
    if (k == 1 && d == 1) return Rational(1);
    return Rational(Int(static_cast<long>(d) * (k - 1)), Int(static_cast<long>(d) * k - 1));
}

Rational tau_constant(int d, int b, int k) {
    Rational one_minus_beta = Rational(1) - beta_exponent(k, d);
    Rational one_minus_alpha = Rational(1) - alpha_exponent(k, d);
    Rational t1 = upper_pow(Rational(b), static_cast<long>(one_minus_beta.num().get_si()),
                            static_cast<long>(one_minus_beta.den().get_si()));
    Rational t2 = upper_pow(Rational(k), static_cast<long>(one_minus_alpha.num().get_si()),
                            static_cast<long>(one_minus_alpha.den().get_si()));
    return t1 * t2;
}

Rational kst_bound(size_t s_size, size_t t_size, const FreenessParams& params) {
    const int k = params.k, b = params.b;
    if (k == 1) return Rational(b) * Rational(Int(s_size));
    Rational root_b = upper_pow(Rational(b), 1, k);
    Rational t_pow = upper_pow(Rational(Int(t_size)), k - 1, k);
    return root_b * Rational(Int(s_size)) * t_pow + Rational(k - 1) * Rational(Int(t_size));
}

BoundReport theorem6_bound(size_t s_size, long deg_t, long deg_v, int d,
                           const FreenessParams& params, const Rational& c1) {
    if (d < 1) throw PreconditionViolated("theorem6 needs d >= 1");
    BoundReport rep;
    rep.alpha = alpha_exponent(params.k, d);
    rep.beta = beta_exponent(params.k, d);
    rep.tau = tau_constant(d, params.b, params.k);
    Rational one_minus_alpha = Rational(1) - rep.alpha;
    rep.exponent_identity_ok =
        (params.k == 1 && d == 1) || (one_minus_alpha == rep.beta / Rational(d));

    auto upow = [](const Rational& base, const Rational& e) {
        return upper_pow(base, static_cast<long>(e.num().get_si()),
                         static_cast<long>(e.den().get_si()));
    };
    rep.main_term = c1 * upow(Rational(Int(s_size)), rep.alpha) *
                    upow(Rational(Int(deg_t)), rep.beta) *
                    upow(Rational(Int(deg_v)), one_minus_alpha);
    rep.surface_term = Rational(params.k) * Rational(Int(deg_t)) * Rational(Int(deg_v));
    rep.point_term = Rational(params.b - 1) * Rational(Int(s_size));
    rep.total = rep.main_term + rep.surface_term + rep.point_term;
    rep.dominant = 0;
    if (rep.surface_term > rep.main_term) rep.dominant = 1;
    Rational best = std::max(rep.main_term, rep.surface_term);
    if (rep.point_term > best) rep.dominant = 2;
    return rep;
}

Rational rich_points_bound(long r, long deg_t, long deg_v, int d, const FreenessParams& params,
                           const Rational& c2) {
    const int k = params.k, b = params.b;
    if (k == 1) throw DomainError("rich-points exponent (d-1)/(k-1) undefined at k = 1");
    if (r < b) throw PreconditionViolated("rich-points bound needs r >= b");
    Rational denom(Int(r - b + 1));
    Rational first = Rational(2) * Rational(Int(deg_t)) / denom;
    Rational b_pow = upper_pow(Rational(b), d - 1, k - 1);
    // 1/(1-alpha) = (dk-1)/(k-1); the denominator power is rounded down so the
    // quotient stays an upper bound.
    Rational denom_pow = lower_pow(denom, static_cast<long>(d) * k - 1, k - 1);
    Rational second = c2 * b_pow * Rational(Int(deg_t)).pow(d) / denom_pow;
    return Rational(k) * Rational(Int(deg_v)) * (first + second);
}

Rational choose_partition_degree(size_t s_size, long deg_t, const std::vector<int>& deltas, int k,
                                 int b, int s, int n) {
    if (s < 0 || static_cast<size_t>(s) > deltas.size())
        throw PreconditionViolated("choose_partition_degree stage out of range");
    Rational prod(1);
    for (int i = 0; i < s; ++i) prod *= Rational(deltas[static_cast<size_t>(i)]);
    Rational numer = Rational(b) * Rational(Int(s_size)).pow(k);
    Rational denom = Rational(k).pow(k) * Rational(Int(deg_t)) * prod.pow(k);
    long root = static_cast<long>(k) * (n - s) - 1;
    if (root < 1) throw PreconditionViolated("degenerate exponent in M_s");
    return upper_pow(numer / denom, 1, root);
}

PartitionedIncidenceReport partitioned_incidence_report(const Variety& v,
                                                        const DeltaProfile& profile,
                                                        const IncidenceStructure& st, long m_value,
                                                        const PartitionOptions& opts) {
    PartitionedIncidenceReport rep;
    auto [chain, preport] = partition(v, profile, st.points, m_value, opts);
    rep.partition = std::move(preport);
    for (size_t i = 0; i < st.points.size(); ++i) {
        long inc = 0;
        for (size_t j = 0; j < st.hypersurfaces.size(); ++j)
            if (st.matrix[i][j]) ++inc;
        std::vector<int> signs = chain_signs(chain, st.points[i]);
        bool on_zero = std::find(signs.begin(), signs.end(), 0) != signs.end();
        if (on_zero)
            rep.on_zero_incidences += inc;
        else
            rep.class_incidences[signs] += inc;
        rep.total += inc;
    }
    return rep;
}

long AbstractBipartite::incidences() const {
    long total = 0;
    for (const auto& m : members) total += static_cast<long>(m.size());
    return total;
}

AbstractBipartite parse_abstract_bipartite(std::istream& in) {
    AbstractBipartite bip;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<size_t> member;
        long idx;
        while (ls >> idx) {
            if (idx < 0) throw ParseError("negative X index in abstract structure");
            member.push_back(static_cast<size_t>(idx));
            bip.x_size = std::max(bip.x_size, static_cast<size_t>(idx) + 1);
        }
        if (!member.empty()) bip.members.push_back(std::move(member));
    }
    return bip;
}

bool abstract_kb_free(const AbstractBipartite& bip, int k, int b) {
    const size_t ny = bip.members.size();
    if (ny < static_cast<size_t>(b)) return true;
    std::vector<std::vector<bool>> has(bip.members.size(),
                                       std::vector<bool>(bip.x_size, false));
    for (size_t j = 0; j < bip.members.size(); ++j)
        for (size_t x : bip.members[j]) has[j][x] = true;
    std::vector<size_t> idx(static_cast<size_t>(b));
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
        size_t common = 0;
        for (size_t x = 0; x < bip.x_size; ++x) {
            bool in_all = true;
            for (size_t j : idx)
                if (!has[j][x]) {
                    in_all = false;
                    break;
                }
            if (in_all) ++common;
        }
        if (common >= static_cast<size_t>(k)) return false;
        int pos = b - 1;
        while (pos >= 0 &&
               idx[static_cast<size_t>(pos)] == ny - static_cast<size_t>(b - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (size_t i = static_cast<size_t>(pos) + 1; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
    }
    return true;
}

SharpConstructionResult sharp_construction(const AbstractBipartite& xy, const Variety& v, int k,
                                           int b, int delta_v, const SharpOptions& opts) {
    if (!v.has_point_oracle()) throw OracleMissing("sharp construction needs a parameterization");
    if (xy.members.empty() || xy.x_size == 0)
        throw PreconditionViolated("empty abstract structure");
    if (!abstract_kb_free(xy, k, b))
        throw PreconditionViolated("abstract structure is not (k,b)-free");

    SharpConstructionResult res;

    // 1. Regularize: drop members below half the average incidence count,
    //    chunk the rest into disjoint blocks of a common size.
    Rational sigma = Rational(Int(xy.incidences())) / Rational(Int(xy.members.size()));
    std::vector<std::vector<size_t>> survivors;
    size_t min_size = 0;
    for (const auto& y : xy.members) {
        if (Rational(Int(2 * y.size())) < sigma) continue;  // |y| < sigma/2
        survivors.push_back(y);
        min_size = (min_size == 0) ? y.size() : std::min(min_size, y.size());
    }
    if (survivors.empty()) throw PreconditionViolated("regularization dropped every member");
    Rational quarter = sigma / Rational(4);
    Int k_floor = quarter.num() / quarter.den();  // floor, sigma >= 0
    long k_raw = k_floor.get_si();
    size_t block = static_cast<size_t>(k_raw);
    if (k_raw < 1) {
        block = min_size;  // tiny-fixture clamp, reported
        res.clamped_block_size = true;
    }

    // 2. Minimal degree with quotient dimension K+1 (shrinking K when the
    //    Hilbert values jump over it).
    size_t k_trim = 0;
    int degree_d = -1;
    for (int m = 0; m <= 40; ++m) {
        long h = affine_hilbert(v.ideal, m, opts.budget);
        if (h >= 2 && static_cast<size_t>(h) <= block + 1) {
            k_trim = static_cast<size_t>(h - 1);
            degree_d = m;
        }
        if (static_cast<size_t>(h) >= block + 1) break;
    }
    if (degree_d < 0 || k_trim == 0)
        throw PreconditionViolated("no usable quotient dimension at or below the block size");
    res.block_size = static_cast<int>(k_trim);
    res.degree = degree_d;

    res.regularized.x_size = xy.x_size;
    for (const auto& y : survivors) {
        size_t nblocks = y.size() / block;
        for (size_t bi = 0; bi < nblocks; ++bi) {
            std::vector<size_t> chunk(y.begin() + static_cast<long>(bi * block),
                                      y.begin() + static_cast<long>(bi * block + block));
            chunk.resize(k_trim);  // trim to the common size
            res.regularized.members.push_back(std::move(chunk));
        }
    }

    QuotientBasis qb = quotient_basis(v, degree_d, opts.budget);
    if (qb.representatives.size() != k_trim + 1)
        throw PreconditionViolated("quotient basis size mismatch");

    // 3. Sample |X| points, enforcing the needed minors within the budget.
    size_t phase = 0;
    std::vector<RationalPoint> pts;
    size_t minors_used = 0;
    for (size_t attempt = 0; attempt <= opts.resample_budget; ++attempt) {
        if (attempt == opts.resample_budget)
            throw GenericityExhausted("sampling budget hit during sharp construction");
        pts = v.sample_points(xy.x_size, phase);
        phase += xy.x_size + attempt + 1;
        bool distinct = true;
        for (size_t i = 0; i < pts.size() && distinct; ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                if (pts[i] == pts[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;

        auto eval_row = [&](size_t pi) {
            Row row;
            for (const auto& g : qb.representatives) row.push_back(g.evaluate(pts[pi]));
            return row;
        };
        bool generic = true;
        for (const auto& member : res.regularized.members) {
            Matrix m;
            for (size_t pi : member) m.push_back(eval_row(pi));
            if (minors_used++ < opts.minor_budget) {
                if (rank(m) != k_trim) {
                    generic = false;
                    break;
                }
            } else {
                res.minor_budget_exhausted = true;
            }
            for (size_t other = 0; other < pts.size() && generic; ++other) {
                if (std::find(member.begin(), member.end(), other) != member.end()) continue;
                if (minors_used++ >= opts.minor_budget) {
                    res.minor_budget_exhausted = true;
                    break;
                }
                Matrix square = m;
                square.push_back(eval_row(other));
                if (determinant(square).is_zero()) {
                    generic = false;
                    break;
                }
            }
            if (!generic) break;
        }
        if (generic) break;
    }

    // 4. One vanishing polynomial per block (exact nullspace).
    std::vector<Polynomial> surfaces;
    for (const auto& member : res.regularized.members) {
        Matrix m;
        for (size_t pi : member) {
            Row row;
            for (const auto& g : qb.representatives) row.push_back(g.evaluate(pts[pi]));
            m.push_back(std::move(row));
        }
        Matrix ns = nullspace(m, qb.representatives.size());
        if (ns.empty()) throw GenericityExhausted("block matrix has no nullspace");
        Polynomial py(v.nvars());
        for (size_t j = 0; j < qb.representatives.size(); ++j)
            if (!ns[0][j].is_zero()) py += qb.representatives[j].scaled(ns[0][j]);
        surfaces.push_back(std::move(py));
    }

    res.structure = IncidenceStructure::build(pts, surfaces);

    // 5. Exact verification: graph equality and freeness.
    res.graph_equal = true;
    for (size_t i = 0; i < pts.size() && res.graph_equal; ++i)
        for (size_t j = 0; j < res.regularized.members.size(); ++j) {
            const auto& member = res.regularized.members[j];
            bool expected = std::find(member.begin(), member.end(), i) != member.end();
            if (res.structure.matrix[i][j] != expected) {
                res.graph_equal = false;
                break;
            }
        }
    res.kb_free_ok = check_kb_free(res.structure, {k, b}).free;

    // Size condition deg(V) delta^d <= c I(X,Y)/|Y| (reported, not gated).
    Rational lhs = Rational(Int(v.degree)) * Rational(delta_v).pow(v.dim);
    res.size_condition_ok = lhs <= opts.size_condition_c * sigma;

    long inc = count_incidences(res.structure);
    Rational alpha = alpha_exponent(k, v.dim);
    Rational beta = beta_exponent(k, v.dim);
    Rational denom = upper_pow(Rational(Int(res.structure.points.size())),
                               static_cast<long>(alpha.num().get_si()),
                               static_cast<long>(alpha.den().get_si())) *
                     upper_pow(Rational(Int(std::max<long>(res.structure.deg_t_sum, 1))),
                               static_cast<long>(beta.num().get_si()),
                               static_cast<long>(beta.den().get_si())) *
                     upper_pow(Rational(Int(std::max<long>(v.degree, 1))),
                               static_cast<long>((Rational(1) - alpha).num().get_si()),
                               static_cast<long>((Rational(1) - alpha).den().get_si()));
    res.measured_ratio = Rational(Int(inc)) / denom;
    return res;
}

}  // namespace polyvar
