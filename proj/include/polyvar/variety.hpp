#pragma once

#include <optional>

#include "polyvar/hilbert.hpp"
#include "polyvar/ideal.hpp"

namespace polyvar {

/// An ideal asserted prime, with cached dimension/degree and an optional
/// polynomial parameterization (a rational point oracle): coords[i] gives the
/// i-th coordinate as a polynomial in dim-many parameters.
struct Variety {
    Ideal ideal;
    int dim = -1;
    long degree = 0;
    HilbertData hilbert;
    std::optional<std::vector<Polynomial>> parameterization;

    int nvars() const { return ideal.nvars(); }
    int codim() const { return nvars() - dim; }

    static Variety from_ideal(Ideal ideal, const Budget& budget = {});

    /// Attaches after checking symbolically that every generator vanishes
    /// identically on the image.
    void attach_parameterization(std::vector<Polynomial> coords);

    bool has_point_oracle() const;
    /// Points from the deterministic parameter grid, starting at stream
    /// offset `phase` (advance the phase to refine on certificate failure).
    std::vector<RationalPoint> sample_points(size_t count, size_t phase = 0) const;
};

/// Deterministic enumeration of Q: 0, 1, -1, 1/2, -1/2, 2, -2, ... (signed
/// Calkin-Wilf).
Rational rational_stream(size_t index);

/// Tuples over the stream ordered by growing max index, deterministic.
std::vector<std::vector<size_t>> index_tuples(int arity, size_t count);

/// Parameterize the solution set of an all-linear ideal (affine subspace),
/// or nullopt if the ideal is not linear.
std::optional<std::vector<Polynomial>> linear_parameterization(const Ideal& ideal,
                                                               const Budget& budget = {});

}  // namespace polyvar
