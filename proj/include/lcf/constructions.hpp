#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lcf/common.hpp"
#include "lcf/graph.hpp"
#include "lcf/list_assignment.hpp"

namespace lcf {

/// Parameters of the bad assignment on K_{n, n^n t}: n >= 2, t >= 1, m >= n + 1.
struct BadAssignmentParams {
    int n;
    int t;
    int m;

    void validate() const;
    int num_y() const; ///< n^n * t
};

/// X-lists are [m-n] ∪ S_k with S_k = {m + n(k-2) + 1, ..., m + n(k-2) + n}.
/// Y-vertices come in n^n blocks of t consecutive vertices; block j gets
/// [m-n] ∪ A_j, where A_0, A_1, ... are the transversals (s_1, ..., s_n) of
/// S_1 × ... × S_n in lexicographic order. Every list has exactly m colors.
ListAssignment build_bad_assignment(const BadAssignmentParams& p);

/// Closed-form count of proper colorings of build_bad_assignment(p), split by
/// how many X-colors come from [m-n] (N) and from the S_k (S). Binomials with
/// a < b are zero.
Count eval_bad_assignment_formula(const BadAssignmentParams& p);

/// The n = 2 specialisation of the formula above on K_{2,4t}:
/// (m-2)(m-1)^{4t} + (m-3)(m-2)^{4t+1} + 4(m-2)^{2t+1}(m-1)^{2t} + 4(m-2)^t(m-1)^{2t}m^t.
Count eval_k2_4t_formula(int t, int m);

// ---------------------------------------------------------------------------
// Balanced assignments on K_{2,l}
//
// x1 gets [m], x2 gets [m-2] ∪ {m+1, m+2}; each y gets [m-2] plus one of
//   type 1: {m-1, m+1}   type 2: {m-1, m+2}
//   type 3: {m,   m+1}   type 4: {m,   m+2}

ColorList x1_list(int m);
ColorList x2_list(int m);
/// type in 1..4
ColorList y_type_list(int m, int type);

struct BalanceProfile {
    std::array<long, 4> z{}; ///< z[0] counts type-1 vertices, and so on
    int m = 0;

    long l() const { return z[0] + z[1] + z[2] + z[3]; }
    bool balanced() const;
    bool operator==(const BalanceProfile&) const = default;
};

/// Reads off the profile; throws StructuralError naming the first vertex whose
/// list is not of the required form.
BalanceProfile profile_of(const ListAssignment& L, int m, int l);

/// Assignment with the given profile; Y-vertices grouped by type in order.
ListAssignment assignment_from_profile(const BalanceProfile& prof);

/// P(K_{2,l}, L) for any L with this profile (m >= 3, l >= 1). The m^2 color
/// pairs for (x1, x2) fall into ten classes, each contributing a product of
/// powers of (m-2), (m-1) and m.
Count balanced_count(const BalanceProfile& prof);

/// Type appended by extend_balanced: the smallest index among minimal z.
int extension_type(const BalanceProfile& prof);

/// Appends one Y-vertex of type extension_type(profile). L must be balanced.
ListAssignment extend_balanced(const ListAssignment& L, int m, int l);

// ---------------------------------------------------------------------------
// Sufficient conditions, decided in exact integer arithmetic

/// Rational epsilon = p/q with 0 < p/q < 2.
struct RationalEpsilon {
    long p = 1;
    long q = 4;

    void validate() const;
    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
    static RationalEpsilon parse(const std::string& s);
};

/// t large enough for the K_{2,4t} bad assignment to beat P(K_{2,4t}, m):
///   4q(m-2)^{2t+1} < p(m-1)^{2t}  and  4q(m(m-2))^t < (2q-p)((m-1)^2)^t.
bool check_k2_4t_condition(int m, long t, const RationalEpsilon& eps);

/// l large enough for one balanced extension step to preserve the strict
/// inequality; with z = floor(l/4):
///   2q(m-2)^{2z+1} < p(m-1)^{2z}  and  4q(m(m-2))^z < (2q-p)((m-1)^2)^z.
bool check_extension_condition(int m, long l, const RationalEpsilon& eps);

/// Least t >= 1 with check_k2_4t_condition.
long min_t_for_k2_4t(int m, const RationalEpsilon& eps);

// ---------------------------------------------------------------------------
// Certificates

struct WitnessTrace {
    long t = 0;
    RationalEpsilon eps;
    long extension_steps = 0;
    std::array<long, 4> initial_profile{};
    std::array<long, 4> final_profile{};
    /// color map from the construction's labels to the balanced labels
    std::vector<std::pair<Color, Color>> relabeling;
    std::vector<std::string> notes;
};

/// A verified m-assignment L on K_{2,l} with count_L = P(K_{2,l}, L) < count_m = P(K_{2,l}, m).
struct WitnessRecord {
    long l = 0;
    int m = 0;
    ListAssignment assignment;
    Count count_L;
    Count count_m;
    WitnessTrace trace;
};

/// Builds the K_{2,4t} bad assignment (t = min_t_for_k2_4t), extends it to
/// K_{2,l}, and verifies count_L < count_m at every step. Throws
/// InvalidArgument when l < 4t and VerificationError if any check fails.
WitnessRecord certify_tau_gt(long l, int m, const RationalEpsilon& eps = {});

/// Re-checks a witness from its assignment alone.
bool verify_witness(const WitnessRecord& w);

} // namespace lcf
