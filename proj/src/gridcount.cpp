#include "polyvar/gridcount.hpp"

#include <numeric>

#include "polyvar/errors.hpp"

namespace polyvar {

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

GridComponentEstimate estimate_components_grid(const Polynomial& p, const Box& box, int resolution) {
    const int n = p.nvars();
    if (n < 1 || n > 3) throw PreconditionViolated("grid estimate supports 1 <= n <= 3");
    if (box.dims() != n) throw DimensionMismatch("box dimension");
    if (resolution < 2) throw PreconditionViolated("resolution too small");

    std::vector<size_t> shape(static_cast<size_t>(n), static_cast<size_t>(resolution) + 1);
    size_t total = 1;
    for (size_t s : shape) total *= s;
    if (total > (1u << 22)) throw PreconditionViolated("grid too large");

    auto coord = [&](int axis, size_t i) {
        return box.lo[static_cast<size_t>(axis)] +
               (box.hi[static_cast<size_t>(axis)] - box.lo[static_cast<size_t>(axis)]) *
                   Rational(Int(i), Int(resolution));
    };
    auto flatten = [&](const std::vector<size_t>& idx) {
        size_t f = 0;
        for (int a = 0; a < n; ++a) f = f * shape[static_cast<size_t>(a)] + idx[static_cast<size_t>(a)];
        return f;
    };

    // Exact signs at every grid vertex.
    std::vector<int8_t> sign(total, 0);
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    while (true) {
        RationalPoint pt;
        for (int a = 0; a < n; ++a) pt.coords.push_back(coord(a, idx[static_cast<size_t>(a)]));
        sign[flatten(idx)] = static_cast<int8_t>(p.evaluate(pt).sign());
        int a = n - 1;
        while (a >= 0 && ++idx[static_cast<size_t>(a)] == shape[static_cast<size_t>(a)]) {
            idx[static_cast<size_t>(a)] = 0;
            --a;
        }
        if (a < 0) break;
    }

    GridComponentEstimate est;
    est.resolution = resolution;

    // Complement regions: same strict sign, axis adjacency.
    {
        UnionFind uf(total);
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            size_t f = flatten(idx);
            if (sign[f] != 0) {
                for (int a = 0; a < n; ++a) {
                    if (idx[static_cast<size_t>(a)] + 1 == shape[static_cast<size_t>(a)]) continue;
                    auto nb = idx;
                    ++nb[static_cast<size_t>(a)];
                    size_t g = flatten(nb);
                    if (sign[g] == sign[f]) uf.unite(f, g);
                }
            }
            int a = n - 1;
            while (a >= 0 && ++idx[static_cast<size_t>(a)] == shape[static_cast<size_t>(a)]) {
                idx[static_cast<size_t>(a)] = 0;
                --a;
            }
            if (a < 0) break;
        }
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            size_t f = flatten(idx);
            if (sign[f] != 0 && uf.find(f) == f) {
                if (sign[f] > 0)
                    ++est.positive_components;
                else
                    ++est.negative_components;
            }
            int a = n - 1;
            while (a >= 0 && ++idx[static_cast<size_t>(a)] == shape[static_cast<size_t>(a)]) {
                idx[static_cast<size_t>(a)] = 0;
                --a;
            }
            if (a < 0) break;
        }
        est.complement_components = est.positive_components + est.negative_components;
    }

    // Zero set: cells whose corners include a zero or a sign change.
    {
        std::vector<size_t> cell_shape(static_cast<size_t>(n), static_cast<size_t>(resolution));
        size_t cells = 1;
        for (size_t s : cell_shape) cells *= s;
        auto cell_flat = [&](const std::vector<size_t>& c) {
            size_t f = 0;
            for (int a = 0; a < n; ++a) f = f * cell_shape[static_cast<size_t>(a)] + c[static_cast<size_t>(a)];
            return f;
        };
        std::vector<char> touching(cells, 0);
        std::vector<size_t> c(static_cast<size_t>(n), 0);
        while (true) {
            bool has_pos = false, has_nonpos = false, has_neg = false, has_nonneg = false;
            for (size_t corner = 0; corner < (1u << n); ++corner) {
                auto v = c;
                for (int a = 0; a < n; ++a)
                    if (corner & (1u << a)) ++v[static_cast<size_t>(a)];
                int s = sign[flatten(v)];
                if (s > 0) has_pos = true;
                if (s <= 0) has_nonpos = true;
                if (s < 0) has_neg = true;
                if (s >= 0) has_nonneg = true;
            }
            bool touch = (has_pos && has_nonpos) || (has_neg && has_nonneg) ||
                         (!has_pos && !has_neg);
            touching[cell_flat(c)] = touch ? 1 : 0;
            int a = n - 1;
            while (a >= 0 && ++c[static_cast<size_t>(a)] == cell_shape[static_cast<size_t>(a)]) {
                c[static_cast<size_t>(a)] = 0;
                --a;
            }
            if (a < 0) break;
        }
        UnionFind uf(cells);
        std::fill(c.begin(), c.end(), 0);
        while (true) {
            size_t f = cell_flat(c);
            if (touching[f]) {
                for (int a = 0; a < n; ++a) {
                    if (c[static_cast<size_t>(a)] + 1 == cell_shape[static_cast<size_t>(a)]) continue;
                    auto nb = c;
                    ++nb[static_cast<size_t>(a)];
                    if (touching[cell_flat(nb)]) uf.unite(f, cell_flat(nb));
                }
            }
            int a = n - 1;
            while (a >= 0 && ++c[static_cast<size_t>(a)] == cell_shape[static_cast<size_t>(a)]) {
                c[static_cast<size_t>(a)] = 0;
                --a;
            }
            if (a < 0) break;
        }
        std::fill(c.begin(), c.end(), 0);
        while (true) {
            size_t f = cell_flat(c);
            if (touching[f] && uf.find(f) == f) ++est.zero_components;
            int a = n - 1;
            while (a >= 0 && ++c[static_cast<size_t>(a)] == cell_shape[static_cast<size_t>(a)]) {
                c[static_cast<size_t>(a)] = 0;
                --a;
            }
            if (a < 0) break;
        }
    }
    return est;
}

StableGridEstimate stable_components_grid(const Polynomial& p, const Box& box, int resolution) {
    StableGridEstimate out;
    out.coarse = estimate_components_grid(p, box, resolution);
    out.fine = estimate_components_grid(p, box, 2 * resolution);
    out.resolution_too_coarse =
        out.coarse.zero_components != out.fine.zero_components ||
        out.coarse.complement_components != out.fine.complement_components;
    return out;
}

Rational b0_bound_value(int delta, long deg_v, int d) {
    return Rational(delta).pow(d) * Rational(Int(deg_v));
}

Rational cell_visit_bound_value(long deg_v, long deg_p, int d) {
    return Rational(Int(deg_v)) * Rational(Int(deg_p)).pow(d);
}

}  // namespace polyvar
