#include "quintic/exactmath.hpp"

#include <array>
#include <stdexcept>

namespace quintic {

namespace {

template <unsigned M>
constexpr std::array<bool, M> square_table()
{
    std::array<bool, M> t{};
    for (unsigned x = 0; x < M; ++x) {
        t[(x * x) % M] = true;
    }
    return t;
}

constexpr auto kSq64 = square_table<64>();
constexpr auto kSq63 = square_table<63>();
constexpr auto kSq65 = square_table<65>();
constexpr auto kSq11 = square_table<11>();

} // namespace

IsqrtResult isqrt(const BigInt& n)
{
    if (n.sign() < 0) {
        throw std::domain_error("isqrt: negative argument " + n.to_string());
    }
    if (n.is_zero()) {
        return {BigInt(0), true};
    }
    // Start above the root: 2^ceil(bits/2) > sqrt(n).
    std::size_t half = (n.bit_length() + 1) / 2;
    BigInt x = pow(BigInt(2), half);
    while (true) {
        BigInt y = (x + n / x) / BigInt(2);
        if (y >= x) {
            break;
        }
        x = std::move(y);
    }
    while (x * x > n) {
        x -= BigInt(1);
    }
    bool exact = (x * x == n);
    return {std::move(x), exact};
}

bool passes_square_sieve_residue(std::uint64_t residue)
{
    return kSq64[residue % 64] && kSq63[residue % 63] && kSq65[residue % 65] && kSq11[residue % 11];
}

bool passes_square_sieve(const BigInt& n)
{
    if (n.sign() < 0) {
        return false;
    }
    return passes_square_sieve_residue(n.mod_ui(kSquareSieveModulus));
}

bool is_square(const BigInt& n)
{
    if (!passes_square_sieve(n)) {
        return false;
    }
    return isqrt(n).exact;
}

bool exact_sqrt(const BigInt& n, BigInt& root)
{
    if (!passes_square_sieve(n)) {
        return false;
    }
    auto r = isqrt(n);
    if (!r.exact) {
        return false;
    }
    root = std::move(r.root);
    return true;
}

bool is_square_rat(const BigRat& q)
{
    if (q.is_zero()) {
        return true;
    }
    if (q.sign() < 0) {
        return false;
    }
    return is_square(q.num()) && is_square(q.den());
}

} // namespace quintic
