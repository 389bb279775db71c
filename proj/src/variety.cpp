#include "polyvar/variety.hpp"

#include <algorithm>

#include "polyvar/errors.hpp"
#include "polyvar/linalg.hpp"

namespace polyvar {

Variety Variety::from_ideal(Ideal ideal, const Budget& budget) {
    Variety v;
    v.hilbert = dimension_and_degree(ideal, budget);
    v.dim = v.hilbert.dim;
    v.degree = v.hilbert.degree;
    v.ideal = std::move(ideal);
    return v;
}

void Variety::attach_parameterization(std::vector<Polynomial> coords) {
    if (static_cast<int>(coords.size()) != nvars())
        throw DimensionMismatch("parameterization coordinate count");
    for (const auto& g : ideal.generators()) {
        Polynomial pullback = g.compose(coords);
        if (!pullback.is_zero())
            throw PreconditionViolated("parameterization does not satisfy ideal generator " +
                                       g.to_string());
    }
    parameterization = std::move(coords);
}

bool Variety::has_point_oracle() const { return parameterization.has_value(); }

std::vector<RationalPoint> Variety::sample_points(size_t count, size_t phase) const {
    if (!parameterization) throw MissingPointOracle("variety has no parameterization");
    const auto& coords = *parameterization;
    int arity = coords.empty() ? 0 : coords[0].nvars();
    std::vector<std::vector<size_t>> tuples = index_tuples(arity, count + phase);
    std::vector<RationalPoint> out;
    for (size_t i = phase; i < tuples.size(); ++i) {
        RationalPoint params;
        for (size_t j = 0; j < tuples[i].size(); ++j)
            params.coords.push_back(rational_stream(tuples[i][j]));
        RationalPoint p;
        for (const auto& c : coords) p.coords.push_back(c.evaluate(params));
        out.push_back(std::move(p));
    }
    return out;
}

Rational rational_stream(size_t index) {
    if (index == 0) return Rational(0);
    size_t k = (index + 1) / 2;  // 1,1,2,2,3,3,...
    bool negative = (index % 2) == 0;
    // Calkin-Wilf: q_{k+1} = 1 / (2 floor(q_k) - q_k + 1), q_1 = 1.
    mpq_class q(1);
    for (size_t i = 1; i < k; ++i) {
        mpz_class fl = q.get_num() / q.get_den();
        q = mpq_class(1) / (mpq_class(2 * fl) - q + 1);
    }
    Rational r{q};
    return negative ? -r : r;
}

std::vector<std::vector<size_t>> index_tuples(int arity, size_t count) {
    std::vector<std::vector<size_t>> out;
    if (arity == 0) {
        out.emplace_back();
        return out;
    }
    // Shells of growing cube side: all tuples with max entry == side-1.
    for (size_t side = 1; out.size() < count && side < count + 2; ++side) {
        std::vector<size_t> t(static_cast<size_t>(arity), 0);
        while (true) {
            size_t mx = *std::max_element(t.begin(), t.end());
            if (mx == side - 1) out.push_back(t);
            int pos = arity - 1;
            while (pos >= 0) {
                if (++t[static_cast<size_t>(pos)] < side) break;
                t[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

std::optional<std::vector<Polynomial>> linear_parameterization(const Ideal& ideal,
                                                               const Budget& budget) {
    const GroebnerBasis& gb = ideal.groebner(MonomialOrder::grevlex(), budget);
    const int n = ideal.nvars();
    for (const auto& g : gb.basis)
        if (g.degree() > 1) return std::nullopt;
    if (gb.is_unit()) return std::nullopt;
    // Solve the linear system: rows [a_0..a_{n-1} | -const].
    Matrix m;
    for (const auto& g : gb.basis) {
        Row row(static_cast<size_t>(n) + 1, Rational(0));
        for (const auto& [mon, c] : g.terms()) {
            if (mon.is_constant()) {
                row[static_cast<size_t>(n)] = -c;
            } else {
                for (int v = 0; v < n; ++v)
                    if (mon.exps[static_cast<size_t>(v)] == 1) row[static_cast<size_t>(v)] = c;
            }
        }
        m.push_back(std::move(row));
    }
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (size_t c : pivots)
        if (c < static_cast<size_t>(n)) is_pivot[c] = true;
    int free_count = 0;
    for (int v = 0; v < n; ++v)
        if (!is_pivot[static_cast<size_t>(v)]) ++free_count;
    std::vector<Polynomial> coords(static_cast<size_t>(n), Polynomial(free_count));
    int fi = 0;
    std::vector<int> free_index(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        if (!is_pivot[static_cast<size_t>(v)]) free_index[static_cast<size_t>(v)] = fi++;
    for (int v = 0; v < n; ++v)
        if (free_index[static_cast<size_t>(v)] >= 0)
            coords[static_cast<size_t>(v)] =
                Polynomial::variable(free_count, free_index[static_cast<size_t>(v)]);
    for (size_t r = 0; r < pivots.size(); ++r) {
        size_t pc = pivots[r];
        if (pc >= static_cast<size_t>(n)) continue;  // inconsistent row: unit ideal, handled above
        Polynomial expr = Polynomial::constant(free_count, m[r][static_cast<size_t>(n)]);
        for (int v = 0; v < n; ++v) {
            if (static_cast<size_t>(v) == pc) continue;
            Rational c = m[r][static_cast<size_t>(v)];
            if (c.is_zero()) continue;
            expr -= coords[static_cast<size_t>(v)].scaled(c);
        }
        coords[pc] = expr;
    }
    return coords;
}

}  // namespace polyvar
