#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "quintic/bigint.hpp"

namespace quintic {

/// A nonnegative solution of a^5 + b^5 = c^5 + d^5, in the orientation
/// a <= b, c <= d.
struct Solution {
    BigInt a;
    BigInt b;
    BigInt c;
    BigInt d;
    bool trivial = false;

    friend bool operator==(const Solution&, const Solution&) = default;
    friend auto operator<=>(const Solution& x, const Solution& y)
    {
        if (auto r = x.a <=> y.a; r != 0) return r;
        if (auto r = x.b <=> y.b; r != 0) return r;
        if (auto r = x.c <=> y.c; r != 0) return r;
        return x.d <=> y.d;
    }
};

/// Outcome of the six criterion steps, in the order they are applied.
enum class Verdict : std::uint8_t {
    FailSquareD,   // D_Z is not a perfect square
    FailIntegralZ, // (-10T^3 +- Y) / (10T) is not an integer for either sign
    FailNonnegZ,   // Z < 0
    FailSquareZ,   // Z is not a perfect square
    FailParity,    // Z and T differ in parity
    FailSize,      // Z > T^2
    Solution,
};

inline constexpr std::size_t kVerdictCount = 7;

std::string_view verdict_name(Verdict v);

/// One (S, u) search state on the slice (c+d) - (a+b) = h.
struct SliceCell {
    BigInt S;
    BigInt u;
    BigInt T;
    BigInt L;
    BigInt D;
    std::optional<BigInt> Y;
    std::optional<BigInt> Z;
    std::optional<BigInt> v;
    Verdict verdict = Verdict::FailSquareD;
    std::optional<Solution> solution;
};

struct SliceParams {
    std::int64_t h = 0;
    std::int64_t s_min = 0;
    std::int64_t s_max = 0;
};

/// True iff 30 | h; a necessary condition for any solution on the slice.
bool mdo_admissible(std::int64_t h);

/// Checks x^5 == x (mod p) over every residue. p must be 2, 3 or 5,
/// otherwise std::domain_error.
bool mdo_verify_congruence(int p);

/// S^5 + 10 S^3 u^2 + 5 S u^4, which equals 16 (a^5 + b^5) for S = a+b, u = b-a.
BigInt sym_L(const BigInt& S, const BigInt& u);

/// 80 T^6 + 20 T L(S,u) with T = S + h.
BigInt discriminant_DZ(const BigInt& S, const BigInt& u, const BigInt& h);

/// 5T Z^2 + 10T^3 Z + (T^5 - L); zero exactly when Z is a root.
BigInt quadratic_residue(const BigInt& T, const BigInt& L, const BigInt& Z);

/// Runs the criterion on one cell. Requires u == S (mod 2), 0 <= u <= S and
/// T = S + h > 0; throws std::domain_error otherwise.
SliceCell solve_cell(const BigInt& S, const BigInt& u, const BigInt& h);

struct ScanOptions {
    bool mdo_filter = true;
    unsigned workers = 1;
    /// Keep every cell that passed step (1) for offline inspection.
    bool keep_square_cells = false;
};

struct ScanStats {
    std::array<std::uint64_t, kVerdictCount> verdicts{};
    std::uint64_t cells = 0;
    std::uint64_t t_zero_cells = 0;
    std::uint64_t t_negative_cells = 0;
    /// Cells that passed step (2) whose Z failed the quadratic root check.
    std::uint64_t root_check_failures = 0;
    std::uint64_t root_checks = 0;

    ScanStats& operator+=(const ScanStats& o);
};

struct ScanResult {
    SliceParams params;
    bool rejected_by_mdo = false;
    std::vector<Solution> solutions;
    std::vector<Solution> nontrivial;
    std::vector<SliceCell> square_cells;
    ScanStats stats;
};

/// Walks S in [s_min, s_max] and u in {S mod 2, ..., S}. Output order is
/// ascending in (S, u) regardless of the worker count.
ScanResult scan_slice(const SliceParams& params, const ScanOptions& options = {});

/// Recomputes a^5 + b^5 == c^5 + d^5, nonnegativity and the slice offset
/// directly from the four integers.
bool recheck_solution(const Solution& s, const BigInt& h);

} // namespace quintic
