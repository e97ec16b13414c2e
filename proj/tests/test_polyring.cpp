#include "doctest.h"

#include <random>
#include <stdexcept>

#include "quintic/polyring.hpp"

using namespace quintic;

namespace {

const ZPoly S = ZPoly::variable();

ZPoly c(long v) { return ZPoly{BigInt(v)}; }

struct Slice30 {
    ZPoly T = S + c(30);
    ZPoly a4 = c(-864000) * pow(T, 2) * S * (c(3) * pow(T, 5) + c(2) * pow(S, 5));
    ZPoly a6 = c(-345600000) * pow(T, 3) * pow(S, 4) * (c(9) * pow(T, 5) + pow(S, 5));
    ZPoly e1 = c(-1200) * pow(S, 3) * T;
    ZPoly A = c(3) * e1;
    ZPoly B = c(3) * e1 * e1 + a4;
    ZPoly Delta = A * A - c(4) * B;
};

const ZPoly kQ4 = parse_zpoly("S^4 + 60*S^3 + 1800*S^2 + 27000*S + 162000");
const ZPoly kQ5 = parse_zpoly("S^5 + 120*S^4 + 7200*S^3 + 216000*S^2 + 3240000*S + 19440000");

ZPoly random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::vector<BigInt> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) {
        x = BigInt(coef(rng));
    }
    return ZPoly(std::move(v));
}

// Brute-force mod-p evaluation of f at r.
long eval_mod(const ZPoly& f, long r, long p)
{
    long acc = 0;
    auto cs = f.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        acc = (acc * r + static_cast<long>(cs[i].mod_ui(static_cast<unsigned long>(p)))) % p;
    }
    return acc;
}

// True if the monic quadratic X^2 + s X + t divides f mod p.
bool quadratic_divides_mod(const ZPoly& f, long s, long t, long p)
{
    std::vector<long> r;
    for (const auto& x : f.coeffs()) {
        r.push_back(static_cast<long>(x.mod_ui(static_cast<unsigned long>(p))));
    }
    long inv_lc = 1;
    for (long k = 1; k < p; ++k) {
        if ((r.back() * k) % p == 1) {
            inv_lc = k;
        }
    }
    for (auto& x : r) {
        x = x * inv_lc % p;
    }
    while (r.size() >= 3) {
        long lead = r.back();
        std::size_t sh = r.size() - 3;
        r[sh] = ((r[sh] - lead * t) % p + p) % p;
        r[sh + 1] = ((r[sh + 1] - lead * s) % p + p) % p;
        r.pop_back();
    }
    for (long x : r) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

// Degree 2..5: irreducible mod p iff no root and, from degree 4 on, no
// quadratic factor.
bool exhaustive_irreducible_mod(const ZPoly& f, long p)
{
    for (long r = 0; r < p; ++r) {
        if (eval_mod(f, r, p) == 0) {
            return false;
        }
    }
    if (f.degree() < 4) {
        return true;
    }
    for (long s = 0; s < p; ++s) {
        for (long t = 0; t < p; ++t) {
            if (quadratic_divides_mod(f, s, t, p)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("poly_arith examples")
{
    ZPoly f = pow(S, 5) + c(10) * pow(S, 3) + c(5) * S;
    CHECK(evaluate(f, BigInt(1)) == BigInt(16));
    CHECK(derivative(pow(S, 2)) == c(2) * S);
    CHECK(compose(pow(S, 2), S + c(30)) == pow(S, 2) + c(60) * S + c(900));
    CHECK(derivative(c(7)).is_zero());
    CHECK(ZPoly().degree() == -1);
    CHECK((S - S).is_zero());
}

TEST_CASE("ring axioms and evaluation homomorphism on random polynomials")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> pt(-20, 20);
    for (int i = 0; i < 300; ++i) {
        ZPoly f = random_poly(rng);
        ZPoly g = random_poly(rng);
        ZPoly h = random_poly(rng);
        REQUIRE((f + g) * h == f * h + g * h);
        REQUIRE(f * g == g * f);
        BigInt x(pt(rng));
        REQUIRE(evaluate(f * g + h, x) == evaluate(f, x) * evaluate(g, x) + evaluate(h, x));
        REQUIRE(evaluate(compose(f, g), x) == evaluate(f, evaluate(g, x)));
    }
}

TEST_CASE("text form round trip")
{
    Slice30 m;
    CHECK(to_string(m.B) ==
          "-388800000*S^7 - 46656000000*S^6 - 2449440000000*S^5 - 73483200000000*S^4"
          " - 1322697600000000*S^3 - 13226976000000000*S^2 - 56687040000000000*S");
    CHECK(parse_zpoly(to_string(m.Delta)) == m.Delta);
    CHECK(to_string(-c(2) * S - c(60)) == "-2*S - 60");
    CHECK(to_string(ZPoly()) == "0");
    QPoly q = parse_qpoly("x^6 + 4*x^5 + 4/5*x", "x");
    CHECK(to_string(q, "x") == "x^6 + 4*x^5 + 4/5*x");
    CHECK_THROWS_AS(parse_zpoly("4/5*S"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zpoly("3S"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zpoly("S^a"), std::invalid_argument);
}

TEST_CASE("normalize examples")
{
    CHECK(normalize(-c(2) * S - c(60)) == S + c(30));
    CHECK(normalize(S) == S);
    CHECK(normalize(c(12960000) * pow(S, 2)) == pow(S, 2));
    CHECK_THROWS_AS(normalize(ZPoly()), std::domain_error);
}

TEST_CASE("gcd via subresultants")
{
    ZPoly f = (S + c(1)) * (S - c(2)) * (c(3) * S + c(5));
    ZPoly g = (S - c(2)) * (c(3) * S + c(5)) * (S + c(7));
    CHECK(gcd(f, g) == normalize((S - c(2)) * (c(3) * S + c(5))));
    CHECK(gcd(S + c(1), S + c(2)) == c(1));
    CHECK(gcd(ZPoly(), c(6) * S) == S);
    CHECK(pseudo_remainder(pow(S, 2) + c(1), c(2) * S) == c(4));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        ZPoly a = random_poly(rng);
        ZPoly b = random_poly(rng);
        ZPoly common = random_poly(rng);
        if (a.is_zero() || b.is_zero() || common.is_zero()) {
            continue;
        }
        ZPoly g = gcd(a * common, b * common);
        REQUIRE(divide_exact(a * common, g).has_value());
        REQUIRE(divide_exact(b * common, g).has_value());
        REQUIRE(divide_exact(g, normalize(common)).has_value());
    }
}

TEST_CASE("squarefree_part examples")
{
    CHECK(squarefree_part(pow(S, 2) * (S + c(30))) == S * (S + c(30)));
    CHECK(squarefree_part(S + c(30)) == S + c(30));
    Slice30 m;
    CHECK(squarefree_part(m.Delta) == S * (S + c(30)) * kQ5);
    CHECK(squarefree_part(m.B) == S * (S + c(30)) * kQ4);
    CHECK_THROWS_AS(squarefree_part(ZPoly()), std::domain_error);
}

TEST_CASE("squarefree parts have constant gcd with their derivative")
{
    Slice30 m;
    std::vector<ZPoly> polys{m.B, m.Delta};
    std::vector<ZPoly> base{S, S + c(30), kQ4};
    std::vector<ZPoly> base5{S, S + c(30), kQ5};
    for (const auto* set : {&base, &base5}) {
        for (unsigned mask = 1; mask < 8; ++mask) {
            ZPoly g = c(1);
            for (unsigned i = 0; i < 3; ++i) {
                if (mask & (1U << i)) {
                    g *= (*set)[i];
                }
            }
            polys.push_back(g);
        }
    }
    for (const auto& f : polys) {
        ZPoly r = squarefree_part(f);
        REQUIRE(gcd(r, derivative(r)).degree() <= 0);
    }
}

TEST_CASE("verify_factorization examples")
{
    Slice30 m;
    FactorClaim<BigInt> b_claim{BigInt(-388800000), {{S, 1}, {S + c(30), 2}, {kQ4, 1}}};
    FactorClaim<BigInt> d_claim{BigInt(12960000), {{S, 1}, {S + c(30), 2}, {kQ5, 1}}};
    CHECK(verify_factorization(m.B, b_claim));
    CHECK(verify_factorization(m.Delta, d_claim));
    auto wrong = b_claim;
    wrong.factors[2].first = kQ5;
    CHECK_FALSE(verify_factorization(m.B, wrong));
    auto zero_mult = b_claim;
    zero_mult.factors[0].second = 0;
    CHECK_FALSE(verify_factorization(m.B, zero_mult));
    // Prime-power units 2^9 3^5 5^5 and 2^8 3^4 5^4.
    CHECK(pow(BigInt(2), 9) * pow(BigInt(3), 5) * pow(BigInt(5), 5) == BigInt(388800000));
    CHECK(pow(BigInt(2), 8) * pow(BigInt(3), 4) * pow(BigInt(5), 4) == BigInt(12960000));
}

TEST_CASE("mod_p_irreducible examples")
{
    CHECK(mod_p_irreducible(S + c(30), 7));
    CHECK_FALSE(mod_p_irreducible(pow(S, 2), 7));
    CHECK_FALSE(mod_p_irreducible(pow(S, 2) + c(1), 5)); // (S+2)(S+3)
    CHECK(mod_p_irreducible(pow(S, 2) + c(1), 7));
    CHECK_THROWS_AS(mod_p_irreducible(c(7) * S + c(1), 7), std::domain_error);
    CHECK_THROWS_AS(mod_p_irreducible(S + c(1), 9), std::domain_error);

    // Certifying primes found by scanning p < 500 and confirmed exhaustively.
    auto p4 = find_irreducibility_prime(kQ4);
    auto p5 = find_irreducibility_prime(kQ5);
    REQUIRE(p4.has_value());
    REQUIRE(p5.has_value());
    CHECK(*p4 == 7U);
    CHECK(*p5 == 11U);
    CHECK(exhaustive_irreducible_mod(kQ4, 7));
    CHECK(exhaustive_irreducible_mod(kQ5, 11));
    CHECK_FALSE(exhaustive_irreducible_mod(kQ4, 5));
}

TEST_CASE("mod_p_irreducible agrees with exhaustive check on small polynomials")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-30, 30);
    std::uniform_int_distribution<int> deg(2, 5);
    for (int i = 0; i < 300; ++i) {
        std::vector<BigInt> v(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : v) {
            x = BigInt(coef(rng));
        }
        v.back() = BigInt(1);
        ZPoly f(std::move(v));
        for (long p : {3L, 5L, 7L, 13L}) {
            INFO(to_string(f), " p=", p);
            REQUIRE(mod_p_irreducible(f, static_cast<std::uint32_t>(p)) ==
                    exhaustive_irreducible_mod(f, p));
        }
    }
}

TEST_CASE("nested construction specializes like a direct construction")
{
    // Q5(S, h) over Q[h][S] versus Q5(S, h0) built with h0 as a number.
    QPoly h = QPoly::variable();
    QPoly2 Sv = QPoly2::variable();
    auto k = [](long v) { return QPoly2(QPoly{BigRat(v)}); };
    QPoly2 H = as_constant(h);
    QPoly2 q5 = pow(Sv, 5) + k(4) * H * pow(Sv, 4) + k(8) * pow(H, 2) * pow(Sv, 3) +
                k(8) * pow(H, 3) * pow(Sv, 2) + k(4) * pow(H, 4) * Sv +
                QPoly2(QPoly{BigRat(BigInt(4), BigInt(5))}) * pow(H, 5);
    for (long h0 : {30L, -30L, 60L}) {
        QPoly direct_S = QPoly::variable();
        BigRat hv(h0);
        auto kk = [](const BigRat& v) { return QPoly{v}; };
        QPoly direct = pow(direct_S, 5) + kk(BigRat(4) * hv) * pow(direct_S, 4) +
                       kk(BigRat(8) * pow(hv, 2)) * pow(direct_S, 3) +
                       kk(BigRat(8) * pow(hv, 3)) * pow(direct_S, 2) + kk(BigRat(4) * pow(hv, 4)) * direct_S +
                       kk(BigRat(BigInt(4), BigInt(5)) * pow(hv, 5));
        QPoly specialized = map_coeffs(q5, [&](const QPoly& cf) { return evaluate(cf, hv); });
        REQUIRE(specialized == direct);
    }
    // swap_variables is an involution.
    CHECK(swap_variables(swap_variables(q5)) == q5);
}
