#include "lcf/exact_count.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "lcf/chrompoly.hpp"

namespace lcf {

namespace {

void check_shape(const Graph& g, const ListAssignment& L)
{
    if (L.size() != static_cast<std::size_t>(g.num_vertices()))
        throw ShapeMismatch("list assignment has " + std::to_string(L.size()) + " lists but the graph has " +
                            std::to_string(g.num_vertices()) + " vertices");
}

bool contains(const ColorList& l, Color c)
{
    return std::binary_search(l.begin(), l.end(), c);
}

class Backtracker {
public:
    Backtracker(const Graph& g, const ListAssignment& L, const Budget& budget)
        : g_(g), L_(L), meter_(budget.max_nodes, "list coloring search"), color_(g.num_vertices(), 0)
    {
        const int n = g.num_vertices();
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        pos_.resize(n);
        for (int i = 0; i < n; ++i)
            pos_[order_[i]] = i;
        // from depth free_from_ on, the uncolored vertices are pairwise non-adjacent
        free_from_ = 0;
        for (auto [u, v] : g.edges())
            free_from_ = std::max(free_from_, std::min(pos_[u], pos_[v]) + 1);
    }

    Count count()
    {
        total_ = 0;
        stop_at_first_ = false;
        run(0);
        return total_;
    }

    bool any()
    {
        total_ = 0;
        stop_at_first_ = true;
        run(0);
        return total_ > 0;
    }

private:
    bool allowed(int v, Color c) const
    {
        for (int w : g_.neighbors(v))
            if (pos_[w] < pos_[v] && color_[w] == c)
                return false;
        return true;
    }

    unsigned long free_choices(int v) const
    {
        unsigned long k = 0;
        for (Color c : L_[v])
            if (allowed(v, c))
                ++k;
        return k;
    }

    // returns false to abort the search
    bool run(int depth)
    {
        meter_.tick();
        const int n = static_cast<int>(order_.size());
        if (depth >= free_from_) {
            Count prod = 1;
            for (int d = depth; d < n; ++d) {
                unsigned long k = free_choices(order_[d]);
                if (k == 0)
                    return true;
                prod *= k;
            }
            total_ += prod;
            return !stop_at_first_;
        }
        int v = order_[depth];
        for (Color c : L_[v]) {
            if (!allowed(v, c))
                continue;
            color_[v] = c;
            if (!run(depth + 1))
                return false;
        }
        color_[v] = 0;
        return true;
    }

    const Graph& g_;
    const ListAssignment& L_;
    NodeMeter meter_;
    std::vector<int> order_, pos_;
    std::vector<Color> color_;
    int free_from_ = 0;
    bool stop_at_first_ = false;
    Count total_;
};

void canonical_rec(int v, int n, int k, int used, std::vector<ColorList>& lists, NodeMeter& meter,
                   const AssignmentVisitor& visit, bool& stop)
{
    if (v == n) {
        meter.tick();
        if (!visit(lists))
            stop = true;
        return;
    }
    for (int fresh = 0; fresh <= k && !stop; ++fresh) {
        const int old = k - fresh;
        if (old > used)
            continue;
        // (old)-subsets of 1..used in lexicographic order
        std::vector<Color> pick(old);
        std::iota(pick.begin(), pick.end(), 1);
        while (!stop) {
            ColorList list = pick;
            for (int j = 1; j <= fresh; ++j)
                list.push_back(used + j);
            lists[v] = std::move(list);
            canonical_rec(v + 1, n, k, used + fresh, lists, meter, visit, stop);

            int i = old - 1;
            while (i >= 0 && pick[i] == used - old + i + 1)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < old; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
}

} // namespace

Count count_list_colorings(const Graph& g, const ListAssignment& L, const Budget& budget)
{
    check_shape(g, L);
    return Backtracker(g, L, budget).count();
}

bool is_L_colorable(const Graph& g, const ListAssignment& L, const Budget& budget)
{
    check_shape(g, L);
    return Backtracker(g, L, budget).any();
}

Count count_bipartite_fast(int n, int l, const ListAssignment& L, const Budget& budget)
{
    if (n < 1 || l < 1)
        throw InvalidArgument("count_bipartite_fast needs n, l >= 1");
    if (L.size() != static_cast<std::size_t>(n) + l)
        throw ShapeMismatch("K_{" + std::to_string(n) + "," + std::to_string(l) + "} needs " +
                            std::to_string(n + l) + " lists, got " + std::to_string(L.size()));

    std::map<ColorList, unsigned long> y_groups;
    for (int j = 0; j < l; ++j)
        ++y_groups[L[n + j]];

    for (int i = 0; i < n; ++i)
        if (L[i].empty())
            return 0;

    NodeMeter meter(budget.max_nodes, "bipartite X-coloring enumeration");
    std::vector<std::size_t> idx(n, 0);
    std::vector<Color> h(n);
    Count total = 0;
    while (true) {
        meter.tick();
        for (int i = 0; i < n; ++i)
            h[i] = L[i][idx[i]];
        std::sort(h.begin(), h.end());
        auto h_end = std::unique(h.begin(), h.end());

        Count term = 1;
        for (const auto& [list, mult] : y_groups) {
            unsigned long blocked = 0;
            for (auto it = h.begin(); it != h_end; ++it)
                blocked += contains(list, *it);
            unsigned long free = list.size() - blocked;
            if (free == 0) {
                term = 0;
                break;
            }
            if (free != 1)
                term *= pow(Count(free), mult);
        }
        total += term;

        int i = n - 1;
        while (i >= 0 && ++idx[i] == L[i].size())
            idx[i--] = 0;
        if (i < 0)
            break;
    }
    return total;
}

void for_each_canonical_assignment(int num_vertices, int k, const Budget& budget, const AssignmentVisitor& visit)
{
    if (num_vertices < 0 || k < 0)
        throw InvalidArgument("vertex count and list size must be nonnegative");
    NodeMeter meter(budget.max_assignments, "canonical assignment enumeration");
    std::vector<ColorList> lists(num_vertices);
    bool stop = false;
    canonical_rec(0, num_vertices, k, 0, lists, meter, visit, stop);
}

std::vector<int> k_core(const Graph& g, int k)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!gone[v] && deg[v] < k) {
                gone[v] = true;
                changed = true;
                for (int w : g.neighbors(v))
                    --deg[w];
            }
        }
    }
    std::vector<int> core;
    for (int v = 0; v < n; ++v)
        if (!gone[v])
            core.push_back(v);
    return core;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices)
{
    std::vector<int> index(g.num_vertices(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

bool is_k_choosable(const Graph& g, int k, const Budget& budget)
{
    if (k < 1)
        throw InvalidArgument("k must be positive");
    // a vertex with fewer than k neighbours can always be colored last
    Graph core = induced_subgraph(g, k_core(g, k));
    if (core.num_vertices() == 0)
        return true;
    if (core.num_vertices() > 10)
        throw ResourceLimitError("choosability enumeration is limited to 10 vertices (k-core has " +
                                 std::to_string(core.num_vertices()) + ")");
    bool choosable = true;
    for_each_canonical_assignment(core.num_vertices(), k, budget, [&](const std::vector<ColorList>& lists) {
        if (!is_L_colorable(core, ListAssignment(lists), budget)) {
            choosable = false;
            return false;
        }
        return true;
    });
    return choosable;
}

int list_chromatic_number(const Graph& g, const Budget& budget)
{
    int max_deg = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        max_deg = std::max(max_deg, g.degree(v));
    for (int k = 1; k <= max_deg; ++k)
        if (is_k_choosable(g, k, budget))
            return k;
    return max_deg + 1;
}

MinimumAssignment list_color_function_bruteforce(const Graph& g, int m, const Budget& budget)
{
    if (m < 1)
        throw InvalidArgument("m must be positive");
    const int n = g.num_vertices();
    const unsigned workers = std::max(1u, budget.workers);
    constexpr auto none = std::numeric_limits<std::uint64_t>::max();

    struct Best {
        std::optional<Count> count;
        std::uint64_t index = none;
        std::vector<ColorList> lists;
    };
    std::vector<Best> best(workers);
    std::atomic<std::uint64_t> zero_at{none};

    auto work = [&](unsigned w) {
        std::uint64_t index = 0;
        Budget inner = budget;
        for_each_canonical_assignment(n, m, budget, [&](const std::vector<ColorList>& lists) {
            std::uint64_t i = index++;
            if (i > zero_at.load(std::memory_order_relaxed))
                return false;
            if (i % workers != w)
                return true;
            Count c = count_list_colorings(g, ListAssignment(lists), inner);
            auto& b = best[w];
            if (!b.count || c < *b.count) {
                b.count = c;
                b.index = i;
                b.lists = lists;
            }
            if (c == 0) {
                std::uint64_t cur = zero_at.load();
                while (i < cur && !zero_at.compare_exchange_weak(cur, i)) {
                }
                return false;
            }
            return true;
        });
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try {
                        work(w);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
        }
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    const Best* winner = nullptr;
    for (const auto& b : best) {
        if (!b.count)
            continue;
        if (!winner || *b.count < *winner->count || (*b.count == *winner->count && b.index < winner->index))
            winner = &b;
    }
    if (!winner)
        return {Count(n == 0 ? 1 : 0), ListAssignment{}};
    return {*winner->count, ListAssignment(winner->lists)};
}

bool plf_equals_chrompoly(const Graph& g, int m, const Budget& budget)
{
    return list_color_function_bruteforce(g, m, budget).count == chromatic_polynomial_eval(g, m, budget);
}

} // namespace lcf
