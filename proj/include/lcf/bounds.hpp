#pragma once

#include "lcf/common.hpp"
#include "lcf/graph.hpp"

namespace lcf {

/// floor( sqrt(q / ln(16/7)) + 1 ) with q = floor(l/4); requires l >= 16.
/// Evaluated with outward-rounded interval arithmetic, doubling the working
/// precision until both ends of the interval share a floor.
long k2l_threshold_lower_bound(long l);

/// |V(g)|^10 + 1.
Count thomassen_upper_bound(const Graph& g);

/// floor( (|E(g)| - 1) / ln(1 + sqrt 2) + 1 ); requires at least one edge.
long edge_count_upper_bound(const Graph& g);
long edge_count_upper_bound(std::size_t num_edges);

struct BoundReport {
    long l = 0;
    long q = 0;     ///< floor(l/4)
    long lower = 0; ///< tau(K_{2,l}) is strictly greater than this
    long upper_wqy = 0; ///< edge-count bound
    Count upper_thomassen;
};

/// Both sides of the window for tau(K_{2,l}); l >= 16.
BoundReport tau_bounds_report(long l);

} // namespace lcf
