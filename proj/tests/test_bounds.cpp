#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcf/bounds.hpp"
#include "oracles.hpp"

using namespace lcf;

TEST_CASE("threshold lower bound")
{
    CHECK(oracle::threshold_lower_bound(16) == 3);
    CHECK(oracle::threshold_lower_bound(400) == 11);
    CHECK(k2l_threshold_lower_bound(16) == 3);
    CHECK(k2l_threshold_lower_bound(400) == 11);
    CHECK_THROWS_AS(k2l_threshold_lower_bound(15), InvalidArgument);

    long prev = 0;
    for (long l = 16; l <= 3000; ++l) {
        long b = k2l_threshold_lower_bound(l);
        CHECK(b >= prev);
        if (l % 37 == 0)
            CHECK(b == oracle::threshold_lower_bound(l));
        prev = b;
    }
}

TEST_CASE("large arguments still decide the floor")
{
    for (long l : {100000L, 1234567L, 99999999L})
        CHECK(k2l_threshold_lower_bound(l) == oracle::threshold_lower_bound(l));
}

TEST_CASE("thomassen bound")
{
    CHECK(thomassen_upper_bound(make_complete_bipartite(2, 4)) == 60466177);
    CHECK(thomassen_upper_bound(make_complete(2)) == 1025);
    CHECK(thomassen_upper_bound(make_complete_bipartite(2, 14)) == pow(2, 40) + 1);
}

TEST_CASE("edge-count bound")
{
    CHECK(edge_count_upper_bound(make_complete_bipartite(2, 12)) == 27);
    CHECK(edge_count_upper_bound(make_complete_bipartite(2, 16)) == 36);
    CHECK(edge_count_upper_bound(make_complete(2)) == 1);
    CHECK_THROWS_AS(edge_count_upper_bound(Graph(3, {})), InvalidArgument);
    for (long e = 2; e <= 500; ++e) {
        long expect = boost::multiprecision::floor(oracle::edge_bound_value(e)).convert_to<long>();
        CHECK(edge_count_upper_bound(static_cast<std::size_t>(e)) == expect);
    }
}

TEST_CASE("bounds report")
{
    BoundReport r = tau_bounds_report(16);
    CHECK(r.lower == 3);
    CHECK(r.upper_wqy == 36);
    CHECK(r.q == 4);
    CHECK(r.upper_thomassen == pow(18, 10) + 1);
    CHECK(tau_bounds_report(400).lower == 11);
    CHECK_THROWS_AS(tau_bounds_report(15), InvalidArgument);
    for (long l = 16; l <= 2000; ++l) {
        BoundReport b = tau_bounds_report(l);
        CHECK(b.lower < b.upper_wqy);
    }
}
