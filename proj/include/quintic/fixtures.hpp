#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quintic/bigint.hpp"

namespace quintic {

struct RankRow {
    std::int64_t S0 = 0;
    std::string torsion;
    int rank = 0;
};

/// Golden values transcribed from external computations, with provenance.
struct Fixtures {
    std::string path;
    std::string fnv1a64; // hex digest of the file bytes
    std::string version;
    std::int64_t h = 0;
    std::string B_h30;
    int B_unit_sign = 1;
    std::vector<std::pair<long, unsigned long>> B_unit_prime_powers;
    int Delta_unit_sign = 1;
    std::vector<std::pair<long, unsigned long>> Delta_unit_prime_powers;
    std::string Q4_h30;
    std::string Q5_h30;
    std::size_t divisor_count = 0;
    std::int64_t injective_lo = 0;
    std::int64_t injective_hi = 0;
    std::vector<std::int64_t> injective_list;
    std::vector<std::string> genus2_points;
    std::string chabauty_provenance;
    int chabauty_rank_bound = -1;
    std::vector<std::string> chabauty_transcript;
    std::string ranks_provenance;
    std::vector<RankRow> ranks;

    [[nodiscard]] BigInt B_unit() const;
    [[nodiscard]] BigInt Delta_unit() const;
};

/// 64-bit FNV-1a, lowercase hex.
std::string fnv1a64_hex(std::string_view bytes);

/// Throws std::runtime_error if the file is missing or malformed.
Fixtures load_fixtures(const std::string& path);

/// The data directory recorded at configure time.
std::string default_fixture_path();

} // namespace quintic
