#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quintic/poly.hpp"

namespace quintic {

/// unit * prod(factor_i ^ multiplicity_i).
template <typename R>
struct FactorClaim {
    R unit;
    std::vector<std::pair<Poly<R>, unsigned>> factors;
};

template <typename R>
Poly<R> expand(const FactorClaim<R>& claim)
{
    Poly<R> acc(claim.unit);
    for (const auto& [f, m] : claim.factors) {
        acc *= pow(f, m);
    }
    return acc;
}

/// True iff the claim multiplies out to f exactly.
template <typename R>
bool verify_factorization(const Poly<R>& f, const FactorClaim<R>& claim)
{
    for (const auto& fm : claim.factors) {
        if (fm.second == 0) {
            return false;
        }
    }
    return expand(claim) == f;
}

/// gcd of the coefficients, nonnegative; zero for the zero polynomial.
BigInt content(const ZPoly& f);

/// f / content(f), sign unchanged.
ZPoly primitive_part(const ZPoly& f);

/// Primitive part with positive leading coefficient. Throws std::domain_error on 0.
ZPoly normalize(const ZPoly& f);

/// Pseudo-remainder prem(f, g) = lc(g)^(deg f - deg g + 1) f mod g.
ZPoly pseudo_remainder(const ZPoly& f, const ZPoly& g);

/// Exact quotient f / g over Z[X], or nullopt when g does not divide f.
std::optional<ZPoly> divide_exact(const ZPoly& f, const ZPoly& g);

/// Exact quotient over Q[X]; nullopt when the remainder is nonzero.
std::optional<QPoly> divide_exact(const QPoly& f, const QPoly& g);

/// gcd over Z[X] through the subresultant remainder sequence, normalized.
/// gcd(0, 0) = 0.
ZPoly gcd(const ZPoly& f, const ZPoly& g);

/// Normalized product of the distinct irreducible factors of f, computed as
/// f / gcd(f, f'). Throws std::domain_error on 0.
ZPoly squarefree_part(const ZPoly& f);

/// Irreducibility of f mod p by distinct-degree gcds with X^(p^i) - X.
/// A true answer certifies irreducibility over Q when deg f is preserved.
/// Throws std::domain_error if p divides the leading coefficient or p is not
/// a prime below 2^31.
bool mod_p_irreducible(const ZPoly& f, std::uint32_t p);

/// Smallest prime below `limit` certifying irreducibility, if any.
std::optional<std::uint32_t> find_irreducibility_prime(const ZPoly& f, std::uint32_t limit = 500);

/// r with r^2 = f and positive leading coefficient, if f is a square in Q[X].
std::optional<QPoly> poly_sqrt(const QPoly& f);

bool is_prime_u32(std::uint32_t n);

} // namespace quintic
