#pragma once

#include <map>

#include "polyvar/ideal.hpp"

namespace polyvar {

/// Sampled affine Hilbert function H_I(m) plus the dimension/degree read off
/// its eventual polynomial behavior. c0_observed is the measured floor of
/// H(m) / (m^d * deg) over the sampled tail (positive-existence witness; no
/// specific value is ever asserted).
struct HilbertData {
    std::map<int, long> values;
    int dim = -1;
    long degree = 0;
    Rational c0_observed;
    int c0_threshold_m = 0;
    bool c0_sampled = false;
};

/// dim_Q( Q[x]_{<=m} / I_{<=m} ) counted through standard monomials of the
/// leading-term ideal under grevlex.
long affine_hilbert(const Ideal& ideal, int m, const Budget& budget = {});

/// The standard monomials themselves (ascending grevlex); their count is the
/// affine Hilbert value and they represent a quotient basis in degree <= m.
std::vector<Monomial> standard_monomials(const Ideal& ideal, int m, const Budget& budget = {});

/// Dimension and degree of Z(I) by difference interpolation of H_I: samples m
/// until the d-th difference is constant three times in a row.
HilbertData dimension_and_degree(const Ideal& ideal, const Budget& budget = {}, int max_m = 48);

}  // namespace polyvar
