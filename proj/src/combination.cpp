#include "polyvar/combination.hpp"

#include "polyvar/errors.hpp"
#include "polyvar/rng.hpp"

namespace polyvar {

namespace {

bool admissible(const Polynomial& f, const std::vector<RationalPoint>& pts,
                const std::vector<Ideal>& excluded, const Budget& budget) {
    if (f.is_zero()) return false;
    for (const auto& p : pts)
        if (!f.evaluate(p).is_zero()) return false;
    for (const auto& ideal : excluded)
        if (membership(f, ideal, budget)) return false;
    return true;
}

}  // namespace

Polynomial generic_combination(const std::vector<Polynomial>& polys,
                               const std::vector<RationalPoint>& must_vanish_on,
                               const std::vector<Ideal>& must_not_vanish_on,
                               const CombinationOptions& opts) {
    if (polys.empty()) throw PreconditionViolated("generic_combination with no inputs");
    const int n = polys[0].nvars();

    for (const auto& p : polys)
        if (admissible(p, must_vanish_on, must_not_vanish_on, opts.budget)) return p;

    Rng rng(opts.seed);
    long window = opts.window_start;
    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
        if (attempt > 0 && attempt % opts.window_rounds == 0) window *= 2;
        Polynomial f(n);
        for (const auto& p : polys) {
            long c = rng.int_in(-window, window);
            if (c != 0) f += p.scaled(Rational(c));
        }
        if (admissible(f, must_vanish_on, must_not_vanish_on, opts.budget)) return f;
    }
    throw RetriesExhausted("generic_combination: no admissible combination within budget");
}

}  // namespace polyvar
