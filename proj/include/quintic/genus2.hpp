#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "quintic/bigrat.hpp"
#include "quintic/poly.hpp"

namespace quintic {

/// Y^2 = f(x), deg f = 6, coefficients lowest degree first.
struct SexticModel {
    std::array<BigInt, 7> coeffs;

    [[nodiscard]] ZPoly poly() const;
    /// q^6 f(p/q)
    [[nodiscard]] BigInt homogeneous(const BigInt& p, const BigInt& q) const;
};

/// Y^2 = 25x^6 + 100x^5 + 200x^4 + 200x^3 + 100x^2 + 20x. Checks that f is
/// squarefree and equals 25 (x^6 + 4x^5 + 8x^4 + 8x^3 + 4x^2 + 4/5 x);
/// throws IdentityViolation otherwise.
SexticModel universal_curve();

/// x^6 + 4x^5 + 8x^4 + 8x^3 + 4x^2 + (4/5)x
QPoly normalized_sextic();

struct RationalPointRecord {
    bool at_infinity = false;
    BigRat x;
    BigRat Y;
    BigInt height; // max(|p|, q) for x = p/q; 0 at infinity

    friend bool operator==(const RationalPointRecord&, const RationalPointRecord&) = default;
};

struct PointScanResult {
    std::int64_t height = 0;
    std::uint64_t candidates = 0;
    std::uint64_t sieve_survivors = 0;
    std::vector<RationalPointRecord> points; // affine by (x, Y), then infinity +, -
};

/// All x = p/q with gcd(p, q) = 1, 0 < q <= H, |p| <= H where q^6 f(p/q) is a
/// square, plus the points at infinity. Throws std::domain_error for H < 1.
PointScanResult bounded_height_scan(const SexticModel& curve, std::int64_t H, unsigned workers = 1);

struct PSquareCheck {
    BigRat value;
    bool is_square = false;
    bool homogeneity_holds = false; // P(S,h) == h^6 g(S/h)
};

/// P(S, h) = S Q5(S, h) and its square class. Throws std::domain_error if
/// S = 0 or h = 0.
PSquareCheck p_square_screen(const BigRat& S, const BigRat& h);

struct GridScreen {
    std::uint64_t tested = 0;
    std::uint64_t homogeneity_failures = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> squares; // (S, h)
};

/// S in [-smax, smax] \ {0}, h in {+-step, +-2 step, ...} with |h| <= hmax.
GridScreen p_square_grid(std::int64_t smax, std::int64_t hmax, std::int64_t step = 30, unsigned workers = 1);

/// S0 in [lo, hi] where Delta2(S0, h) is a perfect square.
std::vector<std::int64_t> delta2_square_values(std::int64_t h, std::int64_t lo, std::int64_t hi,
                                               unsigned workers = 1);

/// Delta2(S, h) == 12960000 (S + h)^2 P(S, h) in Q[h][S].
bool verify_delta2_p_consistency();

} // namespace quintic
