#include "polyvar/hilbert.hpp"

#include <algorithm>

#include "polyvar/errors.hpp"

namespace polyvar {

namespace {

std::vector<Monomial> leading_terms(const Ideal& ideal, const Budget& budget) {
    const GroebnerBasis& gb = ideal.groebner(MonomialOrder::grevlex(), budget);
    std::vector<Monomial> lts;
    for (const auto& p : gb.basis) lts.push_back(p.leading_monomial(gb.order));
    return lts;
}

}  // namespace

std::vector<Monomial> standard_monomials(const Ideal& ideal, int m, const Budget& budget) {
    if (m < 0) throw PreconditionViolated("negative Hilbert argument");
    std::vector<Monomial> lts = leading_terms(ideal, budget);
    std::vector<Monomial> out;
    for (const auto& mon : monomials_up_to(ideal.nvars(), m)) {
        bool divisible = false;
        for (const auto& lt : lts)
            if (lt.divides(mon)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(mon);
    }
    return out;
}

long affine_hilbert(const Ideal& ideal, int m, const Budget& budget) {
    return static_cast<long>(standard_monomials(ideal, m, budget).size());
}

HilbertData dimension_and_degree(const Ideal& ideal, const Budget& budget, int max_m) {
    if (ideal.is_unit(budget)) throw PreconditionViolated("dimension of the unit ideal");
    const int n = ideal.nvars();
    HilbertData data;

    std::vector<long> h;
    auto value = [&](int m) {
        long v = affine_hilbert(ideal, m, budget);
        data.values[m] = v;
        return v;
    };

    // Detect polynomial behavior: smallest d whose d-th difference repeats a
    // constant three times at the tail.
    int dim = -1;
    long deg = 0;
    for (int m = 0; m <= max_m; ++m) {
        h.push_back(value(m));
        if (h.size() < 4) continue;
        std::vector<long> diff = h;
        for (int d = 0; d <= n; ++d) {
            if (diff.size() >= 3) {
                long a = diff[diff.size() - 1], b = diff[diff.size() - 2], c = diff[diff.size() - 3];
                if (a == b && b == c && a != 0) {
                    dim = d;
                    deg = a;
                    break;
                }
            }
            if (diff.size() < 2) break;
            std::vector<long> next(diff.size() - 1);
            for (size_t i = 0; i + 1 < diff.size(); ++i) next[i] = diff[i + 1] - diff[i];
            diff = std::move(next);
        }
        if (dim >= 0) break;
    }
    if (dim < 0) throw NotStabilized("Hilbert function did not stabilize within the m budget");
    data.dim = dim;
    data.degree = deg;

    // Measured Theorem-8tool constant: sample from the proxy threshold
    // 2(n-d)*max basis degree (delta itself is a profile-level quantity).
    int delta_proxy = 0;
    for (const auto& p : ideal.groebner(MonomialOrder::grevlex(), budget).basis)
        delta_proxy = std::max(delta_proxy, p.degree_or(0));
    int threshold = std::max(1, 2 * (n - dim) * delta_proxy);
    data.c0_threshold_m = threshold;
    if (deg > 0) {
        int hi = std::min(max_m, threshold + 4);
        for (int m = threshold; m <= hi; ++m) {
            auto it = data.values.find(m);
            long v = (it != data.values.end()) ? it->second : value(m);
            Rational md = Rational(Int(m)).pow(dim);
            Rational ratio = Rational(Int(v)) / (md * Rational(Int(deg)));
            if (!data.c0_sampled || ratio < data.c0_observed) data.c0_observed = ratio;
            data.c0_sampled = true;
        }
    }
    return data;
}

}  // namespace polyvar
