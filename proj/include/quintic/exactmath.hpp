#pragma once

#include <cstdint>

#include "quintic/bigint.hpp"
#include "quintic/bigrat.hpp"

namespace quintic {

struct IsqrtResult {
    BigInt root;
    bool exact = false;
};

/// Floor square root by Newton iteration. Throws std::domain_error for n < 0.
IsqrtResult isqrt(const BigInt& n);

/// Quadratic-residue screen modulo 64, 63, 65 and 11. A false answer proves
/// n is not a square; a true answer still needs isqrt.
bool passes_square_sieve(const BigInt& n);

/// Same screen for a value already reduced modulo kSquareSieveModulus.
bool passes_square_sieve_residue(std::uint64_t residue);

inline constexpr std::uint64_t kSquareSieveModulus = 64ULL * 63ULL * 65ULL * 11ULL;

/// Perfect-square test on integers; negative values are never squares.
bool is_square(const BigInt& n);

/// Exact square root if n is a perfect square.
bool exact_sqrt(const BigInt& n, BigInt& root);

/// True iff q = r^2 for a rational r. Zero counts as a square.
bool is_square_rat(const BigRat& q);

} // namespace quintic
