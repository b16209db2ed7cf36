#include "lcf/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace lcf {

Count parse_decimal(const std::string& s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("not a nonnegative decimal integer: '" + s + "'");
    return Count(s, 10);
}

Budget Budget::from_env()
{
    Budget b;
    if (const char* env = std::getenv("LCF_BUDGET"); env && *env) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0' || v == 0)
            throw InvalidArgument(std::string("LCF_BUDGET must be a positive integer, got '") + env + "'");
        b.max_nodes = v;
        b.max_assignments = v;
    }
    return b;
}

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices)
{
    if (num_vertices < 0)
        throw InvalidArgument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} has an endpoint outside 0.." + std::to_string(n_ - 1));
        if (u == v)
            throw InvalidArgument("loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidArgument("repeated edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const
{
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Graph Graph::without_edge(Edge e) const
{
    if (e.first > e.second)
        std::swap(e.first, e.second);
    auto edges = edges_;
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end())
        throw InvalidArgument("edge not present");
    edges.erase(it);
    return Graph(n_, std::move(edges));
}

bool is_tree(int n, const std::vector<Edge>& edges)
{
    if (n < 1 || static_cast<int>(edges.size()) != n - 1)
        return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            return false;
        int a = find(u), b = find(v);
        if (a == b)
            return false;
        parent[a] = b;
    }
    return true; // n-1 edges and acyclic, hence connected
}

void validate(const GraphFamily& f)
{
    std::visit(
        [](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, family::Complete>) {
                if (fam.n < 1)
                    throw InvalidArgument("complete graph needs n >= 1");
            } else if constexpr (std::is_same_v<T, family::Cycle>) {
                if (fam.n < 3)
                    throw InvalidArgument("cycle needs n >= 3");
            } else if constexpr (std::is_same_v<T, family::Tree>) {
                if (!is_tree(fam.n, fam.edges))
                    throw InvalidArgument("tree edge list is not a spanning tree on " +
                                          std::to_string(fam.n) + " vertices");
            } else {
                if (fam.n < 1 || fam.l < 1)
                    throw InvalidArgument("complete bipartite graph needs n, l >= 1");
            }
        },
        f);
}

Graph make_complete(int n)
{
    validate(family::Complete{n});
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph make_cycle(int n)
{
    validate(family::Cycle{n});
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        e.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(e));
}

Graph make_tree(int n, std::vector<Edge> edges)
{
    if (!is_tree(n, edges))
        throw InvalidArgument("edge list is not a spanning tree");
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int n, int l)
{
    validate(family::CompleteBipartite{n, l});
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n) * l);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < l; ++y)
            e.emplace_back(x, n + y);
    return Graph(n + l, std::move(e));
}

Graph make_graph(const GraphFamily& f)
{
    return std::visit(
        [](const auto& fam) -> Graph {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, family::Complete>)
                return make_complete(fam.n);
            else if constexpr (std::is_same_v<T, family::Cycle>)
                return make_cycle(fam.n);
            else if constexpr (std::is_same_v<T, family::Tree>)
                return make_tree(fam.n, fam.edges);
            else
                return make_complete_bipartite(fam.n, fam.l);
        },
        f);
}

std::optional<std::pair<int, int>> complete_bipartite_shape(const Graph& g)
{
    int total = g.num_vertices();
    if (total < 2 || g.num_edges() == 0)
        return std::nullopt;
    // X is vertex 0 plus its non-neighbours; it must be a prefix.
    int n = total - g.degree(0);
    int l = total - n;
    if (n < 1 || l < 1 || g.num_edges() != static_cast<std::size_t>(n) * l)
        return std::nullopt;
    for (auto [u, v] : g.edges())
        if (!(u < n && v >= n))
            return std::nullopt;
    return std::make_pair(n, l);
}

} // namespace lcf
