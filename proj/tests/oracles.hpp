// Test-only oracles. Nothing here calls the library's counting routines.
#pragma once

#include <random>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "lcf/graph.hpp"
#include "lcf/list_assignment.hpp"

namespace oracle {

using lcf::Color;
using lcf::ColorList;
using lcf::Count;
using lcf::Graph;
using Dec = boost::multiprecision::cpp_dec_float_100;

/// Walks every tuple in the product of the lists and checks each edge.
inline Count brute_force_colorings(const Graph& g, const std::vector<ColorList>& lists)
{
    const int n = g.num_vertices();
    for (const auto& l : lists)
        if (l.empty())
            return 0;
    std::vector<std::size_t> idx(n, 0);
    Count total = 0;
    while (true) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (lists[u][idx[u]] == lists[v][idx[v]]) {
                proper = false;
                break;
            }
        if (proper)
            ++total;
        int i = n - 1;
        while (i >= 0 && ++idx[i] == lists[i].size())
            idx[i--] = 0;
        if (i < 0)
            break;
    }
    return total;
}

inline Count brute_force_colorings(const Graph& g, int m)
{
    ColorList all;
    for (int c = 1; c <= m; ++c)
        all.push_back(c);
    return brute_force_colorings(g, std::vector<ColorList>(g.num_vertices(), all));
}

/// |C_(a1,a2)| on K_{2,l}: colorings with x1 = a1 and x2 = a2, as a direct
/// product over Y. x1 and x2 are non-adjacent, so a1 == a2 is allowed.
inline Count cell(const std::vector<ColorList>& lists, Color a1, Color a2)
{
    Count prod = 1;
    for (std::size_t j = 2; j < lists.size(); ++j) {
        long k = 0;
        for (Color c : lists[j])
            if (c != a1 && c != a2)
                ++k;
        prod *= k;
    }
    return prod;
}

/// J for appending a type-1 y-list ([m-2] ∪ {m-1, m+1}) to a balanced K_{2,l}
/// assignment, from the cells whose Y-factor grows when the new vertex is added:
/// J = 2c(m,m+2) + c(m-1,m+2) + c(m,m+1) + Σ c(i,m+2) + Σ c(m,i) + Σ c(i,i), i in [m-2].
inline Count extension_J(const std::vector<ColorList>& lists, int m)
{
    auto c = [&](Color a, Color b) { return cell(lists, a, b); };
    Count J = 2 * c(m, m + 2) + c(m - 1, m + 2) + c(m, m + 1);
    for (int i = 1; i <= m - 2; ++i)
        J += c(i, m + 2) + c(m, i) + c(i, i);
    return J;
}

inline Graph random_graph(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<lcf::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline std::vector<ColorList> random_lists(std::mt19937& rng, int n, int max_color, int max_size)
{
    std::vector<ColorList> lists(n);
    std::uniform_int_distribution<int> size(0, max_size);
    for (auto& l : lists) {
        std::vector<Color> all;
        for (int c = 1; c <= max_color; ++c)
            all.push_back(c);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(std::min<int>(size(rng), max_color));
        std::sort(all.begin(), all.end());
        l = all;
    }
    return lists;
}

} // namespace oracle

namespace oracle {

/// 100-digit evaluation of floor(sqrt(q / ln(16/7)) + 1).
inline long threshold_lower_bound(long l)
{
    Dec q = l / 4;
    Dec v = boost::multiprecision::sqrt(q / boost::multiprecision::log(Dec(16) / 7)) + 1;
    return boost::multiprecision::floor(v).convert_to<long>();
}

/// 100-digit evaluation of (E - 1) / ln(1 + sqrt 2) + 1 (unfloored).
inline Dec edge_bound_value(long edges)
{
    return Dec(edges - 1) / boost::multiprecision::log(1 + boost::multiprecision::sqrt(Dec(2))) + 1;
}

/// Right-hand side of "t > max{...}" for the K_{2,4t} condition, in logs;
/// `c` is the constant next to (m-2) in the first term (4 here, 2 for the extension step).
inline Dec log_form_threshold(int m, long p, long q, int c)
{
    using boost::multiprecision::log;
    Dec eps = Dec(p) / q;
    Dec first = log(eps / (c * Dec(m - 2))) / (2 * log(Dec(m - 2) / (m - 1)));
    Dec second = log((2 - eps) / 4) / log(1 - 1 / (Dec(m - 1) * (m - 1)));
    return first > second ? first : second;
}

} // namespace oracle
