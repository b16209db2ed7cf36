#pragma once

#include <functional>
#include <vector>

#include "lcf/common.hpp"
#include "lcf/graph.hpp"
#include "lcf/list_assignment.hpp"

namespace lcf {

/// Number of proper L-colorings of g. Backtracks over vertices in descending
/// degree order (ties by index); once the uncolored vertices form an
/// independent set the remainder is a product of available-color counts.
Count count_list_colorings(const Graph& g, const ListAssignment& L, const Budget& budget = {});

/// P(K_{n,l}, L) for L laid out as make_complete_bipartite(n, l) lays out
/// vertices: sums over every coloring of X the product over Y of
/// |L(y) \ h(X)|. Identical Y-lists are grouped so each term is a product of
/// big-integer powers. Budget applies to the number of X-colorings.
Count count_bipartite_fast(int n, int l, const ListAssignment& L, const Budget& budget = {});

bool is_L_colorable(const Graph& g, const ListAssignment& L, const Budget& budget = {});

/// Visits every canonical k-assignment on num_vertices vertices. A list may
/// use any subset of the colors already introduced plus j fresh colors, which
/// are always the next j integers; this covers every k-assignment up to a
/// renaming of colors. The visitor returns false to stop early.
/// Throws ResourceLimitError after budget.max_assignments visits.
using AssignmentVisitor = std::function<bool(const std::vector<ColorList>&)>;
void for_each_canonical_assignment(int num_vertices, int k, const Budget& budget, const AssignmentVisitor& visit);

/// Vertices left after repeatedly deleting vertices of degree < k.
std::vector<int> k_core(const Graph& g, int k);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// True when every k-assignment of g admits a proper coloring. Only the
/// k-core is enumerated; it must have at most 10 vertices.
bool is_k_choosable(const Graph& g, int k, const Budget& budget = {});

int list_chromatic_number(const Graph& g, const Budget& budget = {});

struct MinimumAssignment {
    Count count;
    ListAssignment assignment;
};

/// P_l(g, m): minimum of count_list_colorings over all canonical m-assignments,
/// with the first minimizer in enumeration order. budget.workers > 1 splits
/// the stream round-robin across threads; the result does not depend on it.
MinimumAssignment list_color_function_bruteforce(const Graph& g, int m, const Budget& budget = {});

bool plf_equals_chrompoly(const Graph& g, int m, const Budget& budget = {});

} // namespace lcf
