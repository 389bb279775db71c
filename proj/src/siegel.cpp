#include "polyvar/siegel.hpp"

#include <algorithm>
#include <cmath>

#include "polyvar/errors.hpp"
#include "polyvar/linalg.hpp"

namespace polyvar {

QuotientBasis quotient_basis(const Variety& v, int m, const Budget& budget) {
    if (m < 0) throw PreconditionViolated("quotient_basis needs m >= 0");
    QuotientBasis qb;
    qb.m = m;
    for (const auto& mon : standard_monomials(v.ideal, m, budget))
        qb.representatives.push_back(Polynomial::term(v.nvars(), mon, Rational(1)));
    return qb;
}

namespace {

/// Nonzero combination of the representatives vanishing at every point, or
/// zero when the nullspace is trivial.
Polynomial solve_vanishing(const QuotientBasis& qb, const std::vector<RationalPoint>& pts,
                           int nvars) {
    const size_t t = qb.representatives.size();
    if (t == 0) return Polynomial(nvars);
    Matrix m;
    for (const auto& p : pts) {
        Row row;
        row.reserve(t);
        for (const auto& q : qb.representatives) row.push_back(q.evaluate(p));
        m.push_back(std::move(row));
    }
    Matrix ns = nullspace(m, t);
    if (ns.empty()) return Polynomial(nvars);
    Polynomial out(nvars);
    for (size_t i = 0; i < t; ++i)
        if (!ns[0][i].is_zero()) out += qb.representatives[i].scaled(ns[0][i]);
    return out;
}

}  // namespace

SiegelResult vanish_on_points(const Variety& v, const std::vector<RationalPoint>& s,
                              const SiegelOptions& opts) {
    for (const auto& p : s)
        if (p.nvars() != v.nvars()) throw DimensionMismatch("siegel point dimension");
    for (int m = 0; m <= opts.degree_cap; ++m) {
        QuotientBasis qb = quotient_basis(v, m, opts.budget);
        Polynomial cand = solve_vanishing(qb, s, v.nvars());
        if (cand.is_zero()) continue;
        SiegelResult res;
        res.p = cand;
        res.degree = cand.degree();
        res.minimal = true;  // ascending search
        res.non_member_of_v = !membership(cand, v.ideal, opts.budget);
        for (const auto& p : s)
            if (!cand.evaluate(p).is_zero())
                throw PreconditionViolated("siegel solution failed exact vanishing");
        res.certified_targets = s.size();
        if (!res.non_member_of_v)
            throw PreconditionViolated("quotient-basis combination unexpectedly in I(V)");
        return res;
    }
    throw DegreeBudgetExceeded("vanish_on_points degree cap");
}

SiegelResult vanish_on_varieties(const Variety& v, const std::vector<Variety>& targets,
                                 const SiegelOptions& opts) {
    // Point oracles: explicit parameterization, or automatic for linear ideals.
    std::vector<Variety> oracles = targets;
    for (auto& t : oracles) {
        if (t.has_point_oracle()) continue;
        auto lin = linear_parameterization(t.ideal, opts.budget);
        if (!lin) throw MissingPointOracle("target has neither parameterization nor linear ideal");
        t.attach_parameterization(std::move(*lin));
    }

    long deg_t = 0;
    int l = -1;
    for (const auto& t : targets) {
        deg_t += t.degree;
        l = std::max(l, t.dim);
    }

    for (int m = 1; m <= opts.degree_cap; ++m) {
        size_t phase = 0;
        for (int round = 0; round < opts.sample_rounds; ++round) {
            std::vector<RationalPoint> pts;
            for (const auto& t : oracles) {
                size_t count = static_cast<size_t>(std::max<long>(4, t.degree * m + t.dim + 2))
                               << round;
                for (auto& p : t.sample_points(count, phase)) pts.push_back(std::move(p));
            }
            QuotientBasis qb = quotient_basis(v, m, opts.budget);
            Polynomial cand = solve_vanishing(qb, pts, v.nvars());
            if (cand.is_zero()) break;  // no candidate at this degree; ascend
            // Exact certification: sampling proposes, membership disposes.
            bool certified = true;
            for (const auto& t : targets)
                if (!membership(cand, t.ideal, opts.budget)) {
                    certified = false;
                    break;
                }
            for (const auto& excl : opts.avoid)
                if (membership(cand, excl, opts.budget)) {
                    certified = false;
                    break;
                }
            if (!certified) {
                phase += 8;  // enlarge and refine the grids, same degree
                continue;
            }
            SiegelResult res;
            res.p = cand;
            res.degree = cand.degree();
            res.minimal = false;  // minimal among certified proposals only
            res.non_member_of_v = !membership(cand, v.ideal, opts.budget);
            if (!res.non_member_of_v)
                throw PreconditionViolated("quotient-basis combination unexpectedly in I(V)");
            res.certified_targets = targets.size();
            if (v.dim > l && v.degree > 0 && deg_t > 0) {
                // Reported against (deg T / deg V)^(1/(d-l)); measured only.
                double target = std::pow(static_cast<double>(deg_t) / static_cast<double>(v.degree),
                                         1.0 / static_cast<double>(v.dim - l));
                if (target > 0) {
                    res.degree_ratio = Rational(Int(static_cast<long>(
                                           std::llround(1000.0 * res.degree / target))),
                                                Int(1000));
                    res.degree_ratio_available = true;
                }
            }
            return res;
        }
    }
    throw DegreeBudgetExceeded("vanish_on_varieties degree cap");
}

}  // namespace polyvar
