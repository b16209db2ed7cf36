#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcf/common.hpp"
#include "lcf/graph.hpp"
#include "lcf/list_assignment.hpp"

namespace lcf {

enum class Neighborhood { SwapOneColor, RetypeYList };

struct SearchConfig {
    std::uint64_t max_iterations = 2000; ///< proposals per restart
    unsigned restarts = 4;               ///< runs after the first
    std::uint64_t rng_seed = 0;
    Neighborhood neighborhood = Neighborhood::SwapOneColor;
    std::optional<int> color_universe_size; ///< y-lists draw from 1..U; defaults to m + 2

    int universe_for(int m) const { return color_universe_size.value_or(m + 2); }
};

enum class SearchMethod { Exhaustive, LocalSearch, Construction };

std::string to_string(Neighborhood n);
std::string to_string(SearchMethod m);
Neighborhood parse_neighborhood(const std::string& s);

/// One (l, m) data point. witness_found means best_count < P(K_{2,l}, m),
/// which proves tau(K_{2,l}) > m; its absence proves nothing.
struct EmpiricalTauRow {
    long l = 0;
    int m = 0;
    bool witness_found = false;
    Count best_count;
    std::optional<ListAssignment> best_assignment;
    SearchMethod method = SearchMethod::LocalSearch;
};

/// Minimizing canonical m-assignment of g and its count.
std::pair<ListAssignment, Count> exhaustive_min_assignment(const Graph& g, int m, const Budget& budget = {});

/// Seeded hill descent over m-assignments of K_{2,l}. x1 = [m] and
/// x2 = [m-2] ∪ {m+1, m+2} stay fixed; each y-list is an m-subset of
/// 1..U. Only strict improvements are accepted. The first run starts from a
/// balanced assignment when U >= m + 2, later runs from random y-lists.
/// Runs are merged by smallest count, then smallest serialized assignment.
/// Returns nullopt when U < m (no m-assignment exists).
std::optional<EmpiricalTauRow> local_search_bad_assignment(long l, int m, const SearchConfig& cfg);

/// One row per m in [m_lo, m_hi]: the certified construction when it applies,
/// exhaustive minimization for m = 2 on K_{2,l} with l <= 4, local search
/// otherwise.
std::vector<EmpiricalTauRow> tau_empirical_profile(long l, int m_lo, int m_hi, const SearchConfig& cfg,
                                                   const Budget& budget = {});

} // namespace lcf
