#pragma once

#include "polyvar/split.hpp"
#include "polyvar/variety.hpp"

namespace polyvar {

struct ProfileOptions {
    Budget budget;
    SplitOptions split;
    int degree_cap = 12;  // per-stage search cap for the delta degrees
    uint64_t seed = 0;
};

/// Decomposition component with its Hilbert-derived invariants.
struct ComponentInfo {
    Ideal ideal;
    int dim = -1;
    long degree = 0;
    bool contains_v = false;
};

struct StageRecord {
    int stage = 0;           // i, 1-based
    int delta = 0;           // achieved deg(Q_i)
    bool decomposed = false;
    bool dimension_ok = false;
    int minimal_witness = -1;  // index into components (dimension n-i, Hilbert-equal to V)
    std::vector<ComponentInfo> components;  // of Z(Q_1..Q_i)
};

/// Partial-degree profile: deltas with the witnessing tuple and per-stage
/// certificates. certified means every stage decomposed and had the expected
/// top dimension among components containing V; otherwise the deltas are
/// upper bounds.
struct DeltaProfile {
    int n = 0;
    int d = 0;
    long deg_v = 0;
    std::vector<int> deltas;           // delta_1..delta_{n-d}
    std::vector<Rational> big_deltas;  // Delta_0..Delta_{n-d}
    std::vector<int> admissible;       // admissible i in 0..n-d (0 and n-d always present)
    std::vector<Polynomial> tuple;     // Q_1..Q_{n-d}
    bool certified = false;
    std::vector<StageRecord> stages;

    int stages_count() const { return n - d; }
    /// delta_i with the delta_0 = 0 sentinel; i = n-d+1 is infinite (query
    /// delta_is_infinite first).
    int delta_at(int i) const;
    bool delta_is_infinite(int i) const { return i > stages_count(); }
};

/// Smallest m with a nonzero member of I(V) of degree <= m.
int delta_1(const Variety& v, const Budget& budget = {}, int cap = 64);

/// Greedy minimal-degree tuple construction (cuts every top-dimensional
/// component containing V properly, stage by stage).
DeltaProfile delta_profile(const Variety& v, const ProfileOptions& opts = {});

std::vector<Rational> big_deltas(const std::vector<int>& deltas, long deg_v);
std::vector<int> admissible_indices(const std::vector<int>& deltas);

struct IvmResult {
    int i = 0;
    bool fallback = false;
};

/// Smallest admissible i whose degree interval contains M (after cancelling
/// Delta_i); falls back to the largest admissible i with delta_i <= M.
IvmResult i_v_of_m(const DeltaProfile& profile, long m_value, const Rational& c0,
                   const Rational& c1);

/// Vector-space basis of I(V)_{<=m} (row-reduced Groebner multiples).
std::vector<Polynomial> ideal_space_basis(const Ideal& ideal, int m, const Budget& budget = {});

struct TupleStageCheck {
    int stage = 0;
    bool degree_ok = false;
    bool membership_ok = false;
    bool decomposed = false;
    bool dimension_ok = false;
    bool minimal_ok = false;
    bool unknown = false;  // decomposition incomplete: clauses unverifiable
};

struct TupleCertificate {
    std::vector<TupleStageCheck> stages;
    bool all_certified = false;
};

/// Checks the admissible-tuple clauses per stage: degree bound against
/// K_i * delta_i, membership in I(V), top dimension of components containing
/// V, and the minimal-variety clause via Hilbert equality below delta_{i+1}.
TupleCertificate verify_admissible_tuple(const Variety& v, const DeltaProfile& profile,
                                         const std::vector<Polynomial>& tuple,
                                         const std::vector<Rational>& k_bounds,
                                         const ProfileOptions& opts = {});

struct ConverseBezoutReport {
    Rational degree_ratio;  // deg(V) / prod delta_i, in (0,1]
    bool bezu_upper_holds = false;
    std::vector<std::pair<int, Rational>> stage_ratios;  // (stage, comp degree / prod_{j<=i} delta_j)
};

ConverseBezoutReport converse_bezout_report(const Variety& v, const DeltaProfile& profile);

}  // namespace polyvar
