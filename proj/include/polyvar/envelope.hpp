#pragma once

#include "polyvar/profile.hpp"
#include "polyvar/siegel.hpp"

namespace polyvar {

struct EnvelopeStage {
    int stage = 0;                        // j
    std::vector<ComponentInfo> surface;   // components of dimension exactly n-j
    std::vector<ComponentInfo> envelope;  // components of dimension > n-j
    Rational bezout_degree_bound;         // prod_{i<=j} deg(Q_i)
    long surface_degree_sum = 0;
    bool degree_bound_holds = false;
};

struct EnvelopeReport {
    std::vector<EnvelopeStage> stages;
    std::vector<ComponentInfo> envelope_components;  // maximal components of the union
    bool location_ok = false;  // each envelope component of dim n-i reappears in stage n-i's surface
};

/// Stage-by-stage classification of Z(Q_1..Q_j) into surface and envelope
/// parts, with the unconditional Bezout degree records.
EnvelopeReport envelope(const Variety& v, const std::vector<Polynomial>& tuple,
                        const ProfileOptions& opts = {});

struct KillerResult {
    int k = 0;  // envelope dimension slot n-k
    Polynomial f;
    bool degree_below_delta_k = false;  // reported; guaranteed only for RC-style tuples
};

/// For each k with a nonempty dimension-(n-k) envelope part, a polynomial
/// vanishing on that part but not on V, found by the siegel search at minimal
/// certified degree over the stage-(k-1) minimal variety (envelope parts have
/// dimension above dim V, so the search cannot run over V itself).
std::vector<KillerResult> envelope_killers(const Variety& v, const DeltaProfile& profile,
                                           const EnvelopeReport& report,
                                           const ProfileOptions& opts = {});

struct CoverOptions {
    ProfileOptions profile;
    Rational eps_ratio = Rational(1, 4);  // eps_i = eps_ratio^i
    int k_cap = 4;                        // stage degree allowance K_i <= k_cap
    int max_depth = 6;
};

struct CoverNode {
    Ideal ideal;
    int dim = -1;
    long degree = 0;
    std::vector<Polynomial> tuple;
    std::vector<CoverNode> children;
};

struct FullCover {
    CoverNode root;
    std::vector<ComponentInfo> flattened;  // maximal components of the union
    long degree_sum = 0;
    Rational degree_ratio;  // degree_sum / deg(V), recorded
    bool v_is_component = false;
};

/// Recursive cover: an eps-biased admissible tuple for V, then covers of every
/// envelope component (their dimension strictly exceeds V's, so the recursion
/// terminates at hypersurfaces).
FullCover full_cover(const Variety& v, const CoverOptions& opts = {});

}  // namespace polyvar
