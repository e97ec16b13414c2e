#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "quintic/bigint.hpp"
#include "quintic/slice.hpp"

namespace quintic {

/// Sum value a^k + b^k -> every pair (a <= b) attaining it.
class CollisionTable {
public:
    using Pair = std::pair<std::int64_t, std::int64_t>;

    CollisionTable(int k, std::int64_t bound);

    [[nodiscard]] int exponent() const { return k_; }
    [[nodiscard]] const std::map<BigInt, std::vector<Pair>>& groups() const { return groups_; }
    /// Keys reached by two or more distinct pairs.
    [[nodiscard]] std::vector<BigInt> colliding_keys() const;

private:
    int k_;
    std::map<BigInt, std::vector<Pair>> groups_;
};

struct OracleOptions {
    /// Above this bound pairs are sorted and scanned instead of kept in a map.
    std::int64_t map_threshold = 600;
    unsigned workers = 1;
};

/// All nontrivial equalities a^k + b^k = c^k + d^k with 0 <= a <= b <= N and
/// 0 <= c <= d <= N, each reported once with (a, b) < (c, d). k is 3 or 5;
/// anything else throws std::domain_error.
std::vector<Solution> brute_force(int k, std::int64_t bound, const OracleOptions& options = {});

/// Every solution (trivial ones included) on the slice (c+d) - (a+b) = h with
/// a + b <= s_max, found by grouping pair sums; orientation a <= b, c <= d.
std::vector<Solution> brute_force_slice(int k, std::int64_t h, std::int64_t s_max,
                                        const OracleOptions& options = {});

struct CrossCheck {
    bool agree = false;
    std::vector<Solution> scanner;
    std::vector<Solution> oracle;
};

/// Compares scan_slice(h, 0..s_max) with the brute-force slice set.
CrossCheck cross_check_slice(std::int64_t h, std::int64_t s_max, unsigned workers = 1);

/// Cubic analogue of the slice criterion: 4(a^3+b^3) = S^3 + 3 S u^2, so
/// v^2 = (L - T^3) / (3T). Used only as a positive control.
std::vector<Solution> scan_slice_cubic(std::int64_t h, std::int64_t s_max);

/// S^3 + 3 S u^2.
BigInt sym_L3(const BigInt& S, const BigInt& u);

} // namespace quintic
