#include "lcf/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "lcf/chrompoly.hpp"
#include "lcf/constructions.hpp"
#include "lcf/exact_count.hpp"
#include "lcf/serialize.hpp"

namespace lcf {

std::string to_string(Neighborhood n)
{
    return n == Neighborhood::SwapOneColor ? "swap-one-color" : "retype-y-list";
}

std::string to_string(SearchMethod m)
{
    switch (m) {
    case SearchMethod::Exhaustive: return "exhaustive";
    case SearchMethod::LocalSearch: return "local-search";
    case SearchMethod::Construction: return "construction";
    }
    return "?";
}

Neighborhood parse_neighborhood(const std::string& s)
{
    if (s == "swap-one-color")
        return Neighborhood::SwapOneColor;
    if (s == "retype-y-list")
        return Neighborhood::RetypeYList;
    throw InvalidArgument("unknown neighborhood '" + s + "' (swap-one-color | retype-y-list)");
}

std::pair<ListAssignment, Count> exhaustive_min_assignment(const Graph& g, int m, const Budget& budget)
{
    auto r = list_color_function_bruteforce(g, m, budget);
    return {std::move(r.assignment), std::move(r.count)};
}

namespace {

// Portable bounded draws; std distributions differ between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream)
    {
        std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ULL;
        s = (s ^ (s >> 27)) * 0x94d049bb133111ebULL;
        engine_.seed(s ^ (s >> 31));
    }

    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

ColorList random_subset(Rng& rng, int universe, int size)
{
    std::vector<Color> all(universe);
    std::iota(all.begin(), all.end(), 1);
    for (int i = 0; i < size; ++i)
        std::swap(all[i], all[i + rng.below(universe - i)]);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

struct Candidate {
    Count count;
    std::vector<ColorList> lists;
    std::string key; // serialized form, for tie-breaks
};

bool better(const Candidate& a, const Candidate& b)
{
    return a.count < b.count || (a.count == b.count && a.key < b.key);
}

Candidate run_once(long l, int m, int universe, const SearchConfig& cfg, unsigned run)
{
    Rng rng(cfg.rng_seed, run);
    std::vector<ColorList> lists{x1_list(m), x2_list(m)};
    if (run == 0 && universe >= m + 2 && m >= 2) {
        BalanceProfile prof;
        prof.m = m;
        for (long j = 0; j < l; ++j)
            ++prof.z[j % 4];
        lists = assignment_from_profile(prof).lists();
    } else {
        for (long j = 0; j < l; ++j)
            lists.push_back(random_subset(rng, universe, m));
    }

    auto evaluate = [&](const std::vector<ColorList>& ls) {
        return count_bipartite_fast(2, static_cast<int>(l), ListAssignment(ls));
    };
    Count current = evaluate(lists);

    for (std::uint64_t it = 0; it < cfg.max_iterations && current > 0; ++it) {
        const std::size_t y = 2 + rng.below(static_cast<std::uint64_t>(l));
        ColorList proposal = lists[y];
        if (cfg.neighborhood == Neighborhood::SwapOneColor) {
            if (universe == m)
                break; // no color outside the list to swap in
            std::vector<Color> outside;
            for (Color c = 1; c <= universe; ++c)
                if (!std::binary_search(proposal.begin(), proposal.end(), c))
                    outside.push_back(c);
            proposal[rng.below(proposal.size())] = outside[rng.below(outside.size())];
            std::sort(proposal.begin(), proposal.end());
        } else {
            proposal = random_subset(rng, universe, m);
        }
        if (proposal == lists[y])
            continue;
        std::swap(lists[y], proposal);
        Count c = evaluate(lists);
        if (c < current)
            current = c;
        else
            std::swap(lists[y], proposal);
    }

    Candidate out{current, lists, {}};
    out.key = to_json(ListAssignment(lists)).dump();
    return out;
}

} // namespace

std::optional<EmpiricalTauRow> local_search_bad_assignment(long l, int m, const SearchConfig& cfg)
{
    if (l < 1 || m < 2)
        throw InvalidArgument("local search needs l >= 1 and m >= 2");
    const int universe = cfg.universe_for(m);
    if (universe < m)
        return std::nullopt;

    std::optional<Candidate> best;
    for (unsigned run = 0; run <= cfg.restarts; ++run) {
        Candidate c = run_once(l, m, universe, cfg, run);
        if (!best || better(c, *best))
            best = std::move(c);
        if (best->count == 0)
            break;
    }

    EmpiricalTauRow row;
    row.l = l;
    row.m = m;
    row.method = SearchMethod::LocalSearch;
    row.best_count = best->count;
    row.best_assignment = ListAssignment(best->lists);
    row.witness_found = best->count < closed_form_chrompoly(family::CompleteBipartite{2, static_cast<int>(l)}, m);
    return row;
}

std::vector<EmpiricalTauRow> tau_empirical_profile(long l, int m_lo, int m_hi, const SearchConfig& cfg,
                                                   const Budget& budget)
{
    if (l < 1)
        throw InvalidArgument("l must be positive");
    if (m_lo < 2 || m_hi < m_lo)
        throw InvalidArgument("need 2 <= m_lo <= m_hi");
    std::vector<EmpiricalTauRow> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        if (m >= 3 && l >= 4 * min_t_for_k2_4t(m, RationalEpsilon{})) {
            WitnessRecord w = certify_tau_gt(l, m, RationalEpsilon{});
            rows.push_back({l, m, true, w.count_L, w.assignment, SearchMethod::Construction});
            continue;
        }
        if (m == 2 && l <= 4) {
            auto [assignment, count] = exhaustive_min_assignment(make_complete_bipartite(2, static_cast<int>(l)), m, budget);
            bool found = count < closed_form_chrompoly(family::CompleteBipartite{2, static_cast<int>(l)}, m);
            rows.push_back({l, m, found, count, assignment, SearchMethod::Exhaustive});
            continue;
        }
        if (auto row = local_search_bad_assignment(l, m, cfg))
            rows.push_back(std::move(*row));
    }
    return rows;
}

} // namespace lcf
