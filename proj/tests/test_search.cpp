#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcf/chrompoly.hpp"
#include "lcf/constructions.hpp"
#include "lcf/exact_count.hpp"
#include "lcf/search.hpp"

using namespace lcf;

namespace {

Count k2l_chromatic(long l, int m)
{
    return closed_form_chrompoly(family::CompleteBipartite{2, static_cast<int>(l)}, m);
}

SearchConfig config(std::uint64_t seed, Neighborhood nb = Neighborhood::SwapOneColor)
{
    SearchConfig c;
    c.rng_seed = seed;
    c.neighborhood = nb;
    c.max_iterations = 400;
    c.restarts = 3;
    return c;
}

void check_sound(const EmpiricalTauRow& row)
{
    REQUIRE(row.best_assignment.has_value());
    const auto& L = *row.best_assignment;
    CHECK(L.is_k_assignment(static_cast<std::size_t>(row.m)));
    Count direct = count_bipartite_fast(2, static_cast<int>(row.l), L);
    CHECK(direct == row.best_count);
    CHECK(row.witness_found == (direct < k2l_chromatic(row.l, row.m)));
}

} // namespace

TEST_CASE("exhaustive minimization")
{
    auto [c4, c4_count] = exhaustive_min_assignment(make_cycle(4), 2);
    CHECK(c4_count == 2);

    auto [bad, bad_count] = exhaustive_min_assignment(make_complete_bipartite(2, 4), 2);
    CHECK(bad_count == 0);
    // x-lists disjoint, every y-list meets both
    CHECK(bad[0].size() == 2);
    std::vector<Color> both;
    std::set_intersection(bad[0].begin(), bad[0].end(), bad[1].begin(), bad[1].end(), std::back_inserter(both));
    CHECK(both.empty());

    CHECK(exhaustive_min_assignment(make_complete(2), 2).second == 2);
}

TEST_CASE("local search from the construction")
{
    for (std::uint64_t seed : {1, 2, 3}) {
        SearchConfig c = config(seed);
        c.color_universe_size = 5;
        auto row = local_search_bad_assignment(12, 3, c);
        REQUIRE(row);
        CHECK(row->witness_found);
        CHECK(row->best_count <= 11264);
        check_sound(*row);
    }
}

TEST_CASE("trees never yield witnesses")
{
    for (std::uint64_t seed : {1, 2}) {
        auto row = local_search_bad_assignment(1, 3, config(seed));
        REQUIRE(row);
        CHECK_FALSE(row->witness_found);
        check_sound(*row);
    }
}

TEST_CASE("search is deterministic")
{
    for (Neighborhood nb : {Neighborhood::SwapOneColor, Neighborhood::RetypeYList}) {
        auto a = local_search_bad_assignment(9, 3, config(42, nb));
        auto b = local_search_bad_assignment(9, 3, config(42, nb));
        REQUIRE(a);
        REQUIRE(b);
        CHECK(a->best_count == b->best_count);
        CHECK(a->best_assignment == b->best_assignment);
        check_sound(*a);
    }
}

TEST_CASE("heuristic never undercuts the exhaustive minimum")
{
    struct Case { int l; int m; };
    for (Case cs : {Case{1, 2}, Case{2, 2}, Case{3, 2}, Case{4, 2}, Case{1, 3}, Case{2, 3}, Case{3, 3}}) {
        Count exact = exhaustive_min_assignment(make_complete_bipartite(2, cs.l), cs.m).second;
        for (std::uint64_t seed = 0; seed < 4; ++seed)
            for (Neighborhood nb : {Neighborhood::SwapOneColor, Neighborhood::RetypeYList}) {
                SearchConfig c = config(seed, nb);
                c.restarts = 6;
                auto row = local_search_bad_assignment(cs.l, cs.m, c);
                REQUIRE(row);
                CHECK(row->best_count >= exact);
                check_sound(*row);
            }
    }
}

TEST_CASE("universe smaller than m has no assignment")
{
    SearchConfig c = config(1);
    c.color_universe_size = 2;
    CHECK_FALSE(local_search_bad_assignment(5, 3, c).has_value());
    CHECK_THROWS_AS(local_search_bad_assignment(0, 3, c), InvalidArgument);
}

TEST_CASE("empirical profile")
{
    auto rows = tau_empirical_profile(12, 3, 3, config(1));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].witness_found);
    CHECK(rows[0].method == SearchMethod::Construction);
    CHECK(rows[0].best_count == certify_tau_gt(12, 3).count_L);

    auto small = tau_empirical_profile(8, 3, 3, config(1));
    REQUIRE(small.size() == 1);
    CHECK(small[0].method == SearchMethod::LocalSearch);
    check_sound(small[0]);

    auto two = tau_empirical_profile(16, 3, 4, config(1));
    REQUIRE(two.size() == 2);
    CHECK(two[0].m == 3);
    CHECK(two[0].witness_found);
    CHECK(two[0].method == SearchMethod::Construction);
    CHECK(two[1].m == 4);
    check_sound(two[1]);

    auto m2 = tau_empirical_profile(4, 2, 2, config(1));
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].method == SearchMethod::Exhaustive);
    CHECK(m2[0].witness_found);
    CHECK(m2[0].best_count == 0);
}
