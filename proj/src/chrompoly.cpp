#include "lcf/chrompoly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <vector>

namespace lcf {

namespace {

using Row = std::uint64_t;
using Adjacency = std::vector<Row>;

int degree(const Adjacency& a, int v) { return std::popcount(a[v]); }

Adjacency remove_vertex(const Adjacency& a, int v)
{
    const int n = static_cast<int>(a.size());
    const Row low = (Row{1} << v) - 1;
    Adjacency out;
    out.reserve(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == v)
            continue;
        Row r = a[u];
        out.push_back((r & low) | ((r >> 1) & ~low));
    }
    return out;
}

// Merge v into u, dropping the loop and any parallel edges.
Adjacency contract(Adjacency a, int u, int v)
{
    const Row merged = (a[u] | a[v]) & ~(Row{1} << u) & ~(Row{1} << v);
    for (int w = 0; w < static_cast<int>(a.size()); ++w) {
        if (merged >> w & 1)
            a[w] |= Row{1} << u;
    }
    a[u] = merged;
    return remove_vertex(a, v);
}

// Exact relabeled encoding; vertices ordered by degree then neighbour-degree
// multiset so isomorphic subproblems usually share a key.
std::vector<Row> canonical_key(const Adjacency& a)
{
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        sig[v].push_back(degree(a, v));
        for (int w = 0; w < n; ++w)
            if (a[v] >> w & 1)
                sig[v].push_back(degree(a, w));
        std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] < sig[y]; });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    std::vector<Row> key(n + 1, 0);
    key[0] = static_cast<Row>(n);
    for (int i = 0; i < n; ++i) {
        Row r = a[order[i]];
        Row out = 0;
        while (r) {
            int w = std::countr_zero(r);
            r &= r - 1;
            out |= Row{1} << pos[w];
        }
        key[i + 1] = out;
    }
    return key;
}

class DeletionContraction {
public:
    DeletionContraction(long m, const Budget& budget) : m_(m), meter_(budget.max_nodes, "chromatic polynomial oracle") {}

    Count eval(const Adjacency& a)
    {
        meter_.tick();
        const int n = static_cast<int>(a.size());
        if (n == 0)
            return 1;

        // isolated and pendant vertices peel off without branching
        for (int v = 0; v < n; ++v) {
            int d = degree(a, v);
            if (d == 0)
                return m_ * eval(remove_vertex(a, v));
            if (d == 1)
                return (m_ - 1) * eval(remove_vertex(a, v));
        }

        long edges2 = 0;
        for (int v = 0; v < n; ++v)
            edges2 += degree(a, v);
        if (edges2 == static_cast<long>(n) * (n - 1)) {
            Count r = 1;
            for (int i = 0; i < n; ++i)
                r *= m_ - i;
            return r;
        }

        auto key = canonical_key(a);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        // branch on an edge at a minimum-degree vertex
        int u = 0;
        for (int v = 1; v < n; ++v)
            if (degree(a, v) < degree(a, u))
                u = v;
        int w = std::countr_zero(a[u]);

        Adjacency deleted = a;
        deleted[u] &= ~(Row{1} << w);
        deleted[w] &= ~(Row{1} << u);
        Count r = eval(deleted) - eval(contract(a, u, w));
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    long m_;
    NodeMeter meter_;
    std::map<std::vector<Row>, Count> memo_;
};

} // namespace

Count chromatic_polynomial_eval(const Graph& g, long m, const Budget& budget)
{
    if (m < 0)
        throw InvalidArgument("m must be nonnegative");
    const int n = g.num_vertices();
    if (n > 64)
        throw ResourceLimitError("chromatic polynomial oracle handles at most 64 vertices");
    Adjacency a(n, 0);
    for (auto [u, v] : g.edges()) {
        a[u] |= Row{1} << v;
        a[v] |= Row{1} << u;
    }
    DeletionContraction dc(m, budget);
    return dc.eval(a);
}

Count closed_form_chrompoly(const GraphFamily& f, long m)
{
    if (m < 0)
        throw InvalidArgument("m must be nonnegative");
    validate(f);
    return std::visit(
        [m](const auto& fam) -> Count {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, family::Complete>) {
                Count r = 1;
                for (int i = 0; i < fam.n; ++i)
                    r *= m - i;
                return r;
            } else if constexpr (std::is_same_v<T, family::Cycle>) {
                Count sign = (fam.n % 2 == 0) ? 1 : -1;
                return pow(m - 1, fam.n) + sign * (m - 1);
            } else if constexpr (std::is_same_v<T, family::Tree>) {
                return Count(m) * pow(m - 1, fam.n - 1);
            } else {
                if (fam.n != 2)
                    throw UnsupportedFamily("closed form for K_{n,l} is only available for n = 2");
                return Count(m) * pow(m - 1, fam.l) + Count(m) * (m - 1) * pow(m - 2, fam.l);
            }
        },
        f);
}

} // namespace lcf
