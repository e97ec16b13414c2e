#include "doctest.h"

#include <random>
#include <stdexcept>

#include "quintic/jacobian.hpp"

using namespace quintic;

namespace {

ZPoly zS() { return ZPoly::variable(); }

BigInt eval_z2(const ZPoly2& f, const BigInt& S, const BigInt& h)
{
    return evaluate(map_coeffs(f, [&](const ZPoly& c) { return evaluate(c, h); }), S);
}

BigRat eval_q2(const QPoly2& f, const BigRat& S, const BigRat& h)
{
    return evaluate(map_coeffs(f, [&](const QPoly& c) { return evaluate(c, h); }), S);
}

} // namespace

TEST_CASE("invariants of the h = 30 quartic match the closed forms")
{
    ZPoly S = zS();
    ZPoly T = S + ZPoly(30);
    auto q = discriminant_quartic(BigInt(30));
    CHECK(q.b.is_zero());
    CHECK(q.d.is_zero());
    CHECK(q.a == ZPoly(100) * S * T);
    auto inv = quartic_invariants(q);
    CHECK(inv.I == explicit_I(S, T));
    CHECK(inv.J == explicit_J(S, T));
    CHECK(inv.I == ZPoly(12) * q.a * q.e + q.c * q.c);
    CHECK(inv.J == ZPoly(72) * q.a * q.c * q.e - ZPoly(2) * q.c * q.c * q.c);
}

TEST_CASE("invariant formulas on a trivial quartic")
{
    BinaryQuartic<ZPoly> q{ZPoly(0), ZPoly(0), ZPoly(1), ZPoly(0), ZPoly(0)};
    auto inv = quartic_invariants(q);
    CHECK(inv.I == ZPoly(1));
    CHECK(inv.J == ZPoly(-2));
    auto model = jacobian_model(QuarticInvariants<ZPoly>{ZPoly(0), ZPoly(0)});
    CHECK(model.a4.is_zero());
    CHECK(model.a6.is_zero());
}

TEST_CASE("Jacobian model closed forms, slice and symbolic")
{
    ZPoly S = zS();
    ZPoly T = S + ZPoly(30);
    auto m = jacobian_at(BigInt(30));
    CHECK(m.a4 == explicit_a4(S, T));
    CHECK(m.a6 == explicit_a6(S, T));
    CHECK_FALSE(m.discriminant().is_zero());

    ZPoly2 S2 = symbol_S();
    ZPoly2 T2 = S2 + symbol_h();
    auto g = jacobian_symbolic();
    CHECK(g.a4 == explicit_a4(S2, T2));
    CHECK(g.a6 == explicit_a6(S2, T2));
}

TEST_CASE("two-torsion root and shifted model at h = 30")
{
    ZPoly S = zS();
    ZPoly T = S + ZPoly(30);
    auto tt = two_torsion_at(BigInt(30));
    CHECK(tt.e1 == ZPoly(-1200) * S * S * S * T);
    CHECK(tt.A == ZPoly(-3600) * S * S * S * T);
    CHECK(to_string(tt.B) ==
          "-388800000*S^7 - 46656000000*S^6 - 2449440000000*S^5 - 73483200000000*S^4 "
          "- 1322697600000000*S^3 - 13226976000000000*S^2 - 56687040000000000*S");
    CHECK(tt.B.coeff(0).is_zero());
    CHECK(tt.B.degree() == 7);
}

TEST_CASE("two-torsion root for symbolic h and the cubic factorization")
{
    auto tt = two_torsion_symbolic();
    auto m = jacobian_symbolic();
    // (X - e1)(X^2 + e1 X + e1^2 + a4) == X^3 + a4 X + a6, X outermost.
    using P3 = Poly<ZPoly2>;
    P3 X = P3::variable();
    P3 e1(tt.e1);
    P3 lhs = (X - e1) * (X * X + e1 * X + e1 * e1 + P3(m.a4));
    P3 rhs = X * X * X + P3(m.a4) * X + P3(m.a6);
    CHECK(lhs == rhs);
    CHECK(tt.A == ZPoly2(3) * tt.e1);
    CHECK(tt.B == ZPoly2(3) * tt.e1 * tt.e1 + m.a4);
}

TEST_CASE("a wrong root raises IdentityViolation")
{
    auto m = jacobian_at(BigInt(30));
    ZPoly S = zS();
    ZPoly bad = ZPoly(-1201) * S * S * S * (S + ZPoly(30));
    CHECK_THROWS_AS(verify_two_torsion_root(m, bad, [](const ZPoly& r) { return to_string(r); }),
                    IdentityViolation);
    try {
        verify_two_torsion_root(m, bad, [](const ZPoly& r) { return to_string(r); });
    } catch (const IdentityViolation& e) {
        CHECK_FALSE(e.residue().empty());
        CHECK(e.identity() == "F_S(e1) = 0");
    }
}

TEST_CASE("Delta2 factorization with Q5")
{
    CHECK(verify_delta2_factorization());
    CHECK(to_string(q5_at(BigRat(30))) == "S^5 + 120*S^4 + 7200*S^3 + 216000*S^2 + 3240000*S + 19440000");
    // h = 0: both sides collapse to 12960000 S^3 (S^5 ...) with Q5 = S^5.
    QPoly delta0 = map_coeffs(to_rational(two_torsion_symbolic().Delta),
                              [](const QPoly& c) { return evaluate(c, BigRat(0)); });
    QPoly S = QPoly::variable();
    CHECK(q5_at(BigRat(0)) == pow(S, 5));
    CHECK(delta0 == QPoly(BigRat(12960000)) * pow(S, 8));
}

TEST_CASE("5 Q5 has integer coefficients")
{
    QPoly2 five_q5 = QPoly2(5) * q5_symbolic();
    CHECK_NOTHROW(to_integer(five_q5));
    CHECK_THROWS_AS(to_integer(q5_symbolic()), std::domain_error);
    CHECK(p_symbolic() == QPoly2::variable() * q5_symbolic());
}

TEST_CASE("universality scaling")
{
    CHECK(verify_universality_scaling());
    auto m = jacobian_symbolic();
    struct Spot {
        long h;
        long x;
    };
    for (Spot s : {Spot{30, 1}, Spot{-30, 2}}) {
        BigInt h(s.h);
        BigInt x(s.x);
        BigInt S = h * x;
        CHECK(eval_z2(m.a4, S, h) == pow(h, 8) * evaluate(universal_a4(), x));
        CHECK(eval_z2(m.a6, S, h) == pow(h, 12) * evaluate(universal_a6(), x));
    }
}

TEST_CASE("specialization consistency on random pairs")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-500, 500);
    QPoly2 delta = to_rational(two_torsion_symbolic().Delta);
    for (int i = 0; i < 50; ++i) {
        BigInt S0(dist(rng));
        BigInt h0(dist(rng));
        auto tt = two_torsion_at(h0);
        BigInt A = evaluate(tt.A, S0);
        BigInt B = evaluate(tt.B, S0);
        REQUIRE(eval_q2(delta, BigRat(S0), BigRat(h0)) == BigRat(A * A - BigInt(4) * B));
        BigInt T = S0 + h0;
        REQUIRE(eval_q2(QPoly2(12960000) * p_symbolic(), BigRat(S0), BigRat(h0)) * BigRat(T * T) ==
                BigRat(A * A - BigInt(4) * B));
    }
}

TEST_CASE("no rational points at infinity")
{
    CHECK(check_no_rational_infinity(BigInt(30)));
    CHECK(check_no_rational_infinity(BigInt(60)));
    CHECK(check_no_rational_infinity(BigInt(-30)));
    CHECK(squarefree_part(discriminant_quartic(BigInt(30)).a) == zS() * (zS() + ZPoly(30)));
    CHECK_FALSE(leading_coefficient_not_square(ZPoly(4) * zS() * zS()));
    CHECK(leading_coefficient_not_square(ZPoly(2) * zS() * zS()));
    CHECK_THROWS_AS(check_no_rational_infinity(BigInt(0)), std::domain_error);
}

TEST_CASE("poly_sqrt")
{
    QPoly S = QPoly::variable();
    QPoly r = QPoly{BigRat(3), BigRat(BigInt(1), BigInt(2)), BigRat(-7)};
    auto got = poly_sqrt(r * r);
    REQUIRE(got.has_value());
    CHECK((*got == r || *got == -r));
    CHECK(got->leading().sign() > 0);
    CHECK_FALSE(poly_sqrt(r * r + S).has_value());
    CHECK_FALSE(poly_sqrt(pow(S, 3)).has_value());
}

TEST_CASE("bad fibre locus at h = 30")
{
    ZPoly S = zS();
    ZPoly loc = bad_fibre_locus(BigInt(30));
    CHECK(evaluate(loc, BigInt(0)).is_zero());
    CHECK(evaluate(loc, BigInt(-30)).is_zero());
    CHECK(loc.degree() == 2 + 4 + 5);
}
