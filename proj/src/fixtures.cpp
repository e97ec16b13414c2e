#include "quintic/fixtures.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace quintic {

namespace {

BigInt unit_from(int sign, const std::vector<std::pair<long, unsigned long>>& powers)
{
    BigInt u(sign);
    for (const auto& [p, e] : powers) {
        u = u * pow(BigInt(p), e);
    }
    return u;
}

void read_unit(const nlohmann::json& j, int& sign, std::vector<std::pair<long, unsigned long>>& powers)
{
    sign = j.at("sign").get<int>();
    for (const auto& pe : j.at("prime_powers")) {
        powers.emplace_back(pe.at(0).get<long>(), pe.at(1).get<unsigned long>());
    }
}

} // namespace

BigInt Fixtures::B_unit() const { return unit_from(B_unit_sign, B_unit_prime_powers); }
BigInt Fixtures::Delta_unit() const { return unit_from(Delta_unit_sign, Delta_unit_prime_powers); }

std::string fnv1a64_hex(std::string_view bytes)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

Fixtures load_fixtures(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open fixtures: " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();

    Fixtures f;
    f.path = path;
    f.fnv1a64 = fnv1a64_hex(bytes);
    try {
        auto j = nlohmann::json::parse(bytes);
        f.version = j.at("version").get<std::string>();
        f.h = j.at("h").get<std::int64_t>();
        f.B_h30 = j.at("B_h30").get<std::string>();
        read_unit(j.at("B_unit"), f.B_unit_sign, f.B_unit_prime_powers);
        read_unit(j.at("Delta_unit"), f.Delta_unit_sign, f.Delta_unit_prime_powers);
        f.Q4_h30 = j.at("Q4_h30").get<std::string>();
        f.Q5_h30 = j.at("Q5_h30").get<std::string>();
        f.divisor_count = j.at("divisor_count").get<std::size_t>();
        f.injective_lo = j.at("injective_range").at(0).get<std::int64_t>();
        f.injective_hi = j.at("injective_range").at(1).get<std::int64_t>();
        f.injective_list = j.at("injective_list").get<std::vector<std::int64_t>>();
        f.genus2_points = j.at("genus2_points").get<std::vector<std::string>>();
        const auto& ch = j.at("chabauty");
        f.chabauty_provenance = ch.at("provenance").get<std::string>();
        f.chabauty_rank_bound = ch.at("rank_bound").get<int>();
        f.chabauty_transcript = ch.at("transcript").get<std::vector<std::string>>();
        const auto& rt = j.at("ranks_table");
        f.ranks_provenance = rt.at("provenance").get<std::string>();
        for (const auto& row : rt.at("rows")) {
            f.ranks.push_back({row.at("S0").get<std::int64_t>(), row.at("torsion").get<std::string>(),
                               row.at("rank").get<int>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed fixtures " + path + ": " + e.what());
    }
    return f;
}

std::string default_fixture_path() { return std::string(QUINTIC_DATA_DIR) + "/fixtures.json"; }

} // namespace quintic
