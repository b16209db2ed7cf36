#pragma once

#include "lcf/common.hpp"
#include "lcf/graph.hpp"

namespace lcf {

/// Number of proper m-colorings of g, by deletion-contraction with memoization.
/// Intended for desk-scale graphs (at most 64 vertices, realistically <= 14);
/// throws ResourceLimitError once budget.max_nodes recursive calls are spent.
Count chromatic_polynomial_eval(const Graph& g, long m, const Budget& budget = {});

/// Closed forms for the standard families:
///   K_n:      m(m-1)...(m-n+1)
///   C_n:      (m-1)^n + (-1)^n (m-1)
///   tree:     m(m-1)^(n-1)
///   K_{2,l}:  m(m-1)^l + m(m-1)(m-2)^l
/// CompleteBipartite with n != 2 throws UnsupportedFamily.
Count closed_form_chrompoly(const GraphFamily& family, long m);

} // namespace lcf
