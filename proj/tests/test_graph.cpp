#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lcf/chrompoly.hpp"
#include "lcf/graph.hpp"
#include "oracles.hpp"

using namespace lcf;

TEST_CASE("graph invariants are enforced")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("make_complete_bipartite")
{
    Graph k22 = make_complete_bipartite(2, 2);
    CHECK(k22.num_vertices() == 4);
    CHECK(k22.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

    Graph k11 = make_complete_bipartite(1, 1);
    CHECK(k11.num_vertices() == 2);
    CHECK(k11.num_edges() == 1);

    Graph k24 = make_complete_bipartite(2, 4);
    CHECK(k24.num_vertices() == 6);
    CHECK(k24.num_edges() == 8);

    CHECK_THROWS_AS(make_complete_bipartite(0, 3), InvalidArgument);
    CHECK_THROWS_AS(make_complete_bipartite(2, 0), InvalidArgument);

    CHECK(complete_bipartite_shape(k24) == std::make_pair(2, 4));
    CHECK_FALSE(complete_bipartite_shape(make_cycle(5)).has_value());
}

TEST_CASE("family validation")
{
    CHECK_THROWS_AS(make_cycle(2), InvalidArgument);
    CHECK_THROWS_AS(make_tree(4, {{0, 1}, {1, 2}, {2, 0}}), InvalidArgument);
    CHECK_THROWS_AS(make_tree(4, {{0, 1}, {2, 3}}), InvalidArgument);
    CHECK_NOTHROW(make_tree(4, {{0, 1}, {1, 2}, {1, 3}}));
}

TEST_CASE("chromatic polynomial examples")
{
    CHECK(chromatic_polynomial_eval(make_complete(3), 3) == 6);
    CHECK(chromatic_polynomial_eval(make_cycle(4), 3) == 18);
    CHECK(chromatic_polynomial_eval(make_complete_bipartite(2, 4), 0) == 0);
    CHECK(chromatic_polynomial_eval(make_cycle(5), 0) == 0);

    Graph k24 = make_complete_bipartite(2, 4);
    Count brute = oracle::brute_force_colorings(k24, 3);
    CHECK(brute == 54);
    CHECK(chromatic_polynomial_eval(k24, 3) == brute);
    CHECK(brute == 3 * 16 + 3 * 2 * 1);
}

TEST_CASE("closed forms")
{
    CHECK(closed_form_chrompoly(family::CompleteBipartite{2, 4}, 3) == 54);
    CHECK(closed_form_chrompoly(family::Tree{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}}, 2) == 2);
    CHECK(closed_form_chrompoly(family::Tree{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}}, 2) == 2);
    for (long m = 0; m <= 10; ++m)
        CHECK(closed_form_chrompoly(family::Cycle{3}, m) == closed_form_chrompoly(family::Complete{3}, m));
    CHECK_THROWS_AS(closed_form_chrompoly(family::CompleteBipartite{3, 2}, 4), UnsupportedFamily);
}

TEST_CASE("closed forms agree with deletion-contraction on small families")
{
    std::vector<GraphFamily> fams;
    for (int n = 1; n <= 8; ++n)
        fams.push_back(family::Complete{n});
    for (int n = 3; n <= 8; ++n)
        fams.push_back(family::Cycle{n});
    for (int l = 1; l <= 6; ++l)
        fams.push_back(family::CompleteBipartite{2, l});
    fams.push_back(family::Tree{1, {}});
    fams.push_back(family::Tree{6, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}}});
    fams.push_back(family::Tree{8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}});

    for (const auto& f : fams) {
        Graph g = make_graph(f);
        for (long m = 0; m <= 6; ++m)
            CHECK(closed_form_chrompoly(f, m) == chromatic_polynomial_eval(g, m));
    }
}

TEST_CASE("deletion-contraction identity and the m^|V| bound on random graphs")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 7;
        Graph g = oracle::random_graph(rng, n, 0.5);
        if (g.num_edges() == 0)
            continue;
        Edge e = g.edges()[rng() % g.num_edges()];
        // contraction, built independently: merge e.second into e.first
        std::vector<int> label(n);
        for (int v = 0, next = 0; v < n; ++v)
            label[v] = (v == e.second) ? -1 : next++;
        label[e.second] = label[e.first];
        std::set<Edge> merged;
        for (auto [u, v] : g.edges()) {
            int a = label[u], b = label[v];
            if (a != b)
                merged.insert({std::min(a, b), std::max(a, b)});
        }
        Graph contracted(n - 1, {merged.begin(), merged.end()});
        Graph deleted = g.without_edge(e);
        for (long m = 0; m <= 5; ++m) {
            Count p = chromatic_polynomial_eval(g, m);
            CHECK(p == chromatic_polynomial_eval(deleted, m) - chromatic_polynomial_eval(contracted, m));
            CHECK(p <= pow(m, n));
            if (n <= 6 && m <= 4)
                CHECK(p == oracle::brute_force_colorings(g, static_cast<int>(m)));
        }
    }
}

TEST_CASE("oracle budget")
{
    Budget tiny;
    tiny.max_nodes = 3;
    std::mt19937 rng(1);
    Graph g = oracle::random_graph(rng, 10, 0.6);
    CHECK_THROWS_AS(chromatic_polynomial_eval(g, 4, tiny), ResourceLimitError);
}
