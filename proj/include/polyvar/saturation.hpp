#pragma once

#include "polyvar/ideal.hpp"

namespace polyvar {

/// Eliminate the last variable from an ideal in n+1 variables (lex order with
/// the auxiliary variable most significant); result lives in n variables.
Ideal eliminate_last(const std::vector<Polynomial>& gens, int nvars_ext, const Budget& budget = {});

/// J : f^inf by the auxiliary-variable trick (J + (1 - y f)) cap Q[x].
Ideal saturate_single(const Ideal& j, const Polynomial& f, const Budget& budget = {});

/// J : K^inf as the intersection over generators k of K of the single
/// saturations J : k^inf (exact by a pigeonhole on powers; iterating single
/// saturations instead would remove the union of the Z(k) rather than Z(K)).
/// Edge behavior falls out of the algorithm: J : (1)^inf = J and
/// (1) : K^inf = (1).
Ideal saturate(const Ideal& j, const Ideal& k, const Budget& budget = {});

/// Ideal intersection via (t*A + (1-t)*B) cap Q[x].
Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget = {});

/// p in rad(J), by Rabinowitsch: 1 in J + (1 - y p).
bool radical_membership(const Polynomial& p, const Ideal& j, const Budget& budget = {});

/// True iff Z(v_ideal) is an irreducible component of Z(j): the closure of
/// Z(j) minus V does not contain V, i.e. saturate(j, I(V)) is not inside I(V).
/// Preconditions: j contained in I(V) (and I(V) prime, asserted by the caller).
bool is_component(const Ideal& v_ideal, const Ideal& j, const Budget& budget = {});

}  // namespace polyvar
