#pragma once

#include <iosfwd>

#include "polyvar/partition.hpp"
#include "polyvar/roots.hpp"
#include "polyvar/variety.hpp"

namespace polyvar {

/// Point set against a hypersurface family with the exact incidence matrix:
/// entry (s,t) is true iff the defining polynomial of t vanishes at s.
struct IncidenceStructure {
    std::vector<RationalPoint> points;
    std::vector<Polynomial> hypersurfaces;
    std::vector<std::vector<bool>> matrix;
    long deg_t_sum = 0;

    static IncidenceStructure build(std::vector<RationalPoint> points,
                                    std::vector<Polynomial> hypersurfaces);
};

struct FreenessParams {
    int k = 1;
    int b = 1;
};

/// Both marginal sums, asserted equal (eq. of double counting).
long count_incidences(const IncidenceStructure& st);

struct FreenessWitness {
    bool free = true;
    std::vector<size_t> points;       // k witnesses when not free
    std::vector<size_t> hypersurfaces;  // b witnesses when not free
};

/// (k,b)-freeness via the equivalent restatement: every b-subset of T meets
/// in at most k-1 common points. b is capped by the enumeration budget.
FreenessWitness check_kb_free(const IncidenceStructure& st, const FreenessParams& params,
                              int b_budget = 3);

/// alpha_k(d) = k(d-1)/(dk-1), beta_k(d) = d(k-1)/(dk-1); (1,1) maps to (0,1).
Rational alpha_exponent(int k, int d);
Rational beta_exponent(int k, int d);
/// tau_d(b,k) = b^(1-beta) k^(1-alpha), outward-rounded.
Rational tau_constant(int d, int b, int k);

/// b^(1/k) |S| |T|^(1-1/k) + (k-1)|T| with outward-rounded roots.
Rational kst_bound(size_t s_size, size_t t_size, const FreenessParams& params);

struct BoundReport {
    Rational alpha, beta, tau;
    Rational main_term, surface_term, point_term, total;
    int dominant = 0;  // index of the largest term
    bool exponent_identity_ok = false;  // 1 - alpha == beta / d
};

/// c1 |S|^alpha deg(T)^beta deg(V)^(1-alpha) + k deg(T) deg(V) + (b-1)|S|.
BoundReport theorem6_bound(size_t s_size, long deg_t, long deg_v, int d,
                           const FreenessParams& params, const Rational& c1);

/// k deg(V) ( 2 deg(T)/(r-b+1) + c2 b^((d-1)/(k-1)) deg(T)^d / (r-b+1)^(1/(1-alpha)) ).
/// k = 1 leaves the exponent undefined: DomainError.
Rational rich_points_bound(long r, long deg_t, long deg_v, int d, const FreenessParams& params,
                           const Rational& c2);

/// M_s = ( b |S|^k / (k^k deg(T) (prod_{i<=s} delta_i)^k) )^(1/(k(n-s)-1)).
Rational choose_partition_degree(size_t s_size, long deg_t, const std::vector<int>& deltas, int k,
                                 int b, int s, int n);

struct PartitionedIncidenceReport {
    std::map<std::vector<int>, long> class_incidences;
    long on_zero_incidences = 0;
    long total = 0;
    PartitionReport partition;
};

/// Theorem-6 proof skeleton demo: partition S, bucket the incidences by the
/// sign class of the point. No inequality is asserted.
PartitionedIncidenceReport partitioned_incidence_report(const Variety& v,
                                                        const DeltaProfile& profile,
                                                        const IncidenceStructure& st, long m_value,
                                                        const PartitionOptions& opts = {});

/// Abstract bipartite structure: members list X indices they contain.
struct AbstractBipartite {
    size_t x_size = 0;
    std::vector<std::vector<size_t>> members;

    long incidences() const;
};

/// Adjacency-list text: one line per member, space-separated X indices.
AbstractBipartite parse_abstract_bipartite(std::istream& in);
bool abstract_kb_free(const AbstractBipartite& bip, int k, int b);

struct SharpOptions {
    uint64_t seed = 0;
    Budget budget;
    size_t minor_budget = 4000;
    size_t resample_budget = 24;
    Rational size_condition_c = Rational(64);
};

struct SharpConstructionResult {
    IncidenceStructure structure;
    AbstractBipartite regularized;   // after drop + chunk + trim
    int block_size = 0;              // K (common, post-trim)
    int degree = 0;                  // D: every P_y has degree <= D
    bool clamped_block_size = false; // floor(sigma/4) degenerated; min-size clamp used
    bool minor_budget_exhausted = false;  // genericity under-checked beyond the budget
    bool size_condition_ok = false;       // deg(V) delta^d <= c I/|Y| (reported, never gated)
    bool graph_equal = false;
    bool kb_free_ok = false;
    Rational measured_ratio;  // I(S,T) / (|S|^a deg_T^b deg_V^(1-a))
};

/// Embeds an abstract (k,b)-free structure into hypersurfaces over V(R):
/// regularize, pick the minimal degree with quotient dimension K+1, sample
/// generic points from the parameterization (budgeted minor tests), solve one
/// vanishing polynomial per block, and verify the incidence graph exactly.
SharpConstructionResult sharp_construction(const AbstractBipartite& xy, const Variety& v, int k,
                                           int b, int delta_v, const SharpOptions& opts = {});

}  // namespace polyvar
