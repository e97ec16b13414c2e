#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "quintic/oracle.hpp"

using namespace quintic;

namespace {

bool contains(const std::vector<Solution>& v, long a, long b, long c, long d)
{
    return std::any_of(v.begin(), v.end(), [&](const Solution& s) {
        return s.a == BigInt(a) && s.b == BigInt(b) && s.c == BigInt(c) && s.d == BigInt(d);
    });
}

bool power_sums_equal(const Solution& s, unsigned long k)
{
    return pow(s.a, k) + pow(s.b, k) == pow(s.c, k) + pow(s.d, k);
}

} // namespace

TEST_CASE("quintic brute force is empty up to 500")
{
    auto sols = brute_force(5, 500);
    CHECK(sols.empty());
}

TEST_CASE("quintic collision table has no repeated sums up to 500")
{
    CollisionTable table(5, 500);
    CHECK(table.colliding_keys().empty());
    CHECK(table.groups().size() == 501U * 502U / 2U);
    for (const auto& [value, pairs] : table.groups()) {
        for (const auto& [a, b] : pairs) {
            REQUIRE(pow(BigInt(a), 5) + pow(BigInt(b), 5) == value);
        }
    }
}

TEST_CASE("cubic brute force finds the taxicab collisions")
{
    auto sols = brute_force(3, 20);
    CHECK(contains(sols, 1, 12, 9, 10));
    CHECK(BigInt(1) + BigInt(1728) == BigInt(729) + BigInt(1000));
    for (const auto& s : sols) {
        REQUIRE_FALSE(s.trivial);
        REQUIRE(power_sums_equal(s, 3));
        BigInt h = (s.c + s.d) - (s.a + s.b);
        REQUIRE(h.divisible_by(BigInt(6)));
    }
    CHECK(((BigInt(9) + BigInt(10)) - (BigInt(1) + BigInt(12))) == BigInt(6));
}

TEST_CASE("brute_force rejects bad arguments")
{
    CHECK_THROWS_AS(brute_force(4, 10), std::domain_error);
    CHECK_THROWS_AS(brute_force(5, 0), std::domain_error);
    CHECK_THROWS_AS(CollisionTable(7, 3), std::domain_error);
}

TEST_CASE("map and sort-and-scan grouping agree")
{
    OracleOptions map_mode;
    map_mode.map_threshold = 1000000;
    OracleOptions sort_mode;
    sort_mode.map_threshold = 0;
    sort_mode.workers = 3;
    CHECK(brute_force(3, 200, map_mode) == brute_force(3, 200, sort_mode));
    CHECK(brute_force_slice(5, 0, 120, map_mode) == brute_force_slice(5, 0, 120, sort_mode));
    CHECK(brute_force_slice(3, 6, 150, map_mode) == brute_force_slice(3, 6, 150, sort_mode));
}

TEST_CASE("cross_check_slice h = 30 up to 2000")
{
    CrossCheck cc = cross_check_slice(30, 2000);
    CHECK(cc.agree);
    CHECK(cc.scanner.empty());
    CHECK(cc.oracle.empty());
}

TEST_CASE("cross_check_slice h = 0 up to 200 agrees on the trivial family")
{
    CrossCheck cc = cross_check_slice(0, 200);
    CHECK(cc.agree);
    CHECK_FALSE(cc.scanner.empty());
    for (const auto& s : cc.oracle) {
        REQUIRE(s.trivial);
    }
    std::size_t pairs = 0;
    for (long S = 0; S <= 200; ++S) {
        pairs += static_cast<std::size_t>(S / 2 + 1);
    }
    CHECK(cc.oracle.size() == pairs);
}

TEST_CASE("cross_check_slice on other offsets")
{
    for (std::int64_t h : {-30L, 60L, 29L}) {
        CrossCheck cc = cross_check_slice(h, 300);
        CHECK(cc.agree);
    }
}

TEST_CASE("cubic slice pipeline recovers 1729 on offset 6")
{
    auto sols = scan_slice_cubic(6, 20);
    CHECK(contains(sols, 1, 12, 9, 10));
    for (const auto& s : sols) {
        REQUIRE(power_sums_equal(s, 3));
        REQUIRE((s.c + s.d) - (s.a + s.b) == BigInt(6));
    }
    // Same nontrivial set as the brute-force slice.
    auto oracle = brute_force_slice(3, 6, 200);
    auto scanned = scan_slice_cubic(6, 200);
    std::sort(scanned.begin(), scanned.end());
    CHECK(scanned == oracle);
    CHECK_FALSE(oracle.empty());
}

TEST_CASE("cubic symmetrization identity")
{
    for (long a = 0; a < 40; ++a) {
        for (long b = a; b < 40; ++b) {
            REQUIRE(BigInt(4) * (pow(BigInt(a), 3) + pow(BigInt(b), 3)) == sym_L3(BigInt(a + b), BigInt(b - a)));
        }
    }
}
