#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "lcf/common.hpp"

namespace lcf {

using Edge = std::pair<int, int>;

/// Finite simple graph on vertices 0..num_vertices-1. Edges are stored with
/// u < v, sorted and unique; construction rejects loops and bad endpoints.
class Graph {
public:
    Graph() = default;
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    Graph without_edge(Edge e) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

namespace family {
struct Complete { int n; };
struct Cycle { int n; };
struct Tree { int n; std::vector<Edge> edges; };
struct CompleteBipartite { int n; int l; };
} // namespace family

using GraphFamily = std::variant<family::Complete, family::Cycle, family::Tree, family::CompleteBipartite>;

/// Checks the family's parameter invariants; throws InvalidArgument.
void validate(const GraphFamily& f);

Graph make_graph(const GraphFamily& f);
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_tree(int n, std::vector<Edge> edges);

/// K_{n,l}: partite set X = 0..n-1, Y = n..n+l-1.
Graph make_complete_bipartite(int n, int l);

/// Recovers (n, l) when g is K_{n,l} laid out as make_complete_bipartite does.
std::optional<std::pair<int, int>> complete_bipartite_shape(const Graph& g);

bool is_tree(int n, const std::vector<Edge>& edges);

} // namespace lcf
