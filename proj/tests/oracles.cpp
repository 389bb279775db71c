#include "oracles.hpp"

#include <algorithm>

#include "polyvar/linalg.hpp"

namespace polyvar {
namespace oracle {

long hilbert_rank(const Ideal& ideal, int m, const Budget& budget) {
    const int n = ideal.nvars();
    std::vector<Monomial> cols = monomials_up_to(n, m);
    std::map<Monomial, size_t, CanonicalMonomialLess> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);
    const GroebnerBasis& gb = ideal.groebner(MonomialOrder::grevlex(), budget);
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
    return static_cast<long>(cols.size()) - static_cast<long>(rank(std::move(rows)));
}

namespace {
bool next_subset(std::vector<size_t>& idx, size_t n) {
    const size_t k = idx.size();
    size_t pos = k;
    while (pos > 0) {
        --pos;
        if (idx[pos] != n - (k - pos)) {
            ++idx[pos];
            for (size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
            return true;
        }
    }
    return false;
}
}  // namespace

bool kb_free_exhaustive(const IncidenceStructure& st, int k, int b) {
    const size_t np = st.points.size(), nt = st.hypersurfaces.size();
    if (np < static_cast<size_t>(k) || nt < static_cast<size_t>(b)) return true;
    std::vector<size_t> pi(static_cast<size_t>(k));
    for (size_t i = 0; i < pi.size(); ++i) pi[i] = i;
    do {
        std::vector<size_t> ti(static_cast<size_t>(b));
        for (size_t i = 0; i < ti.size(); ++i) ti[i] = i;
        do {
            bool all = true;
            for (size_t p : pi)
                for (size_t t : ti)
                    if (!st.matrix[p][t]) all = false;
            if (all) return false;
        } while (next_subset(ti, nt));
    } while (next_subset(pi, np));
    return true;
}

long incidence_recount(const IncidenceStructure& st) {
    long total = 0;
    for (size_t i = 0; i < st.points.size(); ++i)
        for (size_t j = 0; j < st.hypersurfaces.size(); ++j)
            if (st.hypersurfaces[j].evaluate(st.points[i]).is_zero()) ++total;
    return total;
}

CensusRecount census_recount(const BisectorChain& chain, const std::vector<RationalPoint>& points,
                             size_t rounds) {
    CensusRecount rc;
    for (const auto& p : points) {
        std::vector<int> signs;
        bool zero = false;
        for (size_t r = 0; r < rounds && r < chain.rounds.size(); ++r) {
            int s = chain.rounds[r].evaluate(p).sign();
            if (s == 0) {
                zero = true;
                break;
            }
            signs.push_back(s);
        }
        if (zero)
            ++rc.on_zero;
        else
            ++rc.classes[signs];
    }
    for (const auto& [key, count] : rc.classes) rc.max_class = std::max(rc.max_class, count);
    return rc;
}

bool bisects_all(const Polynomial& g, const std::vector<std::vector<RationalPoint>>& sets) {
    for (const auto& set : sets) {
        size_t pos = 0, neg = 0;
        for (const auto& p : set) {
            int s = g.evaluate(p).sign();
            if (s > 0) ++pos;
            if (s < 0) ++neg;
        }
        if (2 * pos > set.size() || 2 * neg > set.size()) return false;
    }
    return true;
}

}  // namespace oracle
}  // namespace polyvar
