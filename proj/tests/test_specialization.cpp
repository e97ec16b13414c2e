#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "quintic/exactmath.hpp"
#include "quintic/specialization.hpp"

using namespace quintic;

namespace {

// Independently computed injective values in [1, 100] for h = 30.
const std::vector<std::int64_t> kInjective1To100 = {
    3,  5,  7,  8,  11, 12, 13, 14, 17, 18, 20, 21, 22, 23, 26, 27, 28, 29, 30, 31,
    32, 33, 35, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 50, 52, 53, 54, 55,
    56, 57, 58, 59, 60, 61, 62, 63, 65, 66, 67, 68, 69, 71, 72, 73, 74, 75, 76, 77,
    78, 79, 80, 82, 83, 84, 85, 86, 87, 88, 89, 90, 92, 93, 94, 95, 96, 97, 99};

const std::vector<std::int64_t> kListed = {3, 5, 7, 8, 11, 12, 13, 14, 17, 18, 20, 21};

std::uint64_t enumerate_points(long a4, long a6, long p)
{
    std::uint64_t n = 1;
    for (long x = 0; x < p; ++x) {
        for (long y = 0; y < p; ++y) {
            long lhs = (y * y) % p;
            long rhs = (((x * x % p) * x + a4 * x + a6) % p + p) % p;
            if (lhs == rhs) {
                ++n;
            }
        }
    }
    return n;
}

SpecializedCurve raw_curve(long a4, long a6)
{
    SpecializedCurve c;
    c.a4 = BigInt(a4);
    c.a6 = BigInt(a6);
    c.disc = BigInt(-16) * (BigInt(4) * pow(c.a4, 3) + BigInt(27) * c.a6 * c.a6);
    return c;
}

} // namespace

TEST_CASE("divisor set for h = 30")
{
    DivisorSet set = build_divisor_set(30);
    CHECK(set.divisors.size() == 11);
    CHECK(to_string(set.q4) == "S^4 + 60*S^3 + 1800*S^2 + 27000*S + 162000");
    CHECK(to_string(set.q5) == "S^5 + 120*S^4 + 7200*S^3 + 216000*S^2 + 3240000*S + 19440000");
    CHECK(set.unit_B == BigRat(-388800000));
    CHECK(set.unit_Delta == BigRat(12960000));
    CHECK(BigRat(pow(BigInt(2), 9) * pow(BigInt(3), 5) * pow(BigInt(5), 5)) == BigRat(388800000));
    CHECK(BigRat(pow(BigInt(2), 8) * pow(BigInt(3), 4) * pow(BigInt(5), 4)) == BigRat(12960000));
    CHECK(set.q4_prime == std::optional<std::uint32_t>(7));
    CHECK(set.q5_prime == std::optional<std::uint32_t>(11));

    std::vector<std::string> labels;
    for (const auto& d : set.divisors) {
        labels.push_back(d.label);
    }
    CHECK(labels == std::vector<std::string>{"S", "S+30", "Q4", "Q5", "S*(S+30)", "S*Q4", "(S+30)*Q4", "S*Q5",
                                             "(S+30)*Q5", "S*(S+30)*Q4", "S*(S+30)*Q5"});
    ZPoly S = ZPoly::variable();
    ZPoly T = S + ZPoly(30);
    ZPoly b_rad = S * T * set.q4;
    ZPoly d_rad = S * T * set.q5;
    std::set<std::string> distinct;
    for (const auto& d : set.divisors) {
        REQUIRE((divide_exact(b_rad, d.poly).has_value() || divide_exact(d_rad, d.poly).has_value()));
        REQUIRE(gcd(d.poly, derivative(d.poly)).degree() == 0);
        distinct.insert(to_string(d.poly));
    }
    CHECK(distinct.size() == 11);
}

TEST_CASE("divisor set errors")
{
    CHECK_THROWS_AS(build_divisor_set(0), std::domain_error);
    CHECK_NOTHROW(build_divisor_set(60));
    CHECK_NOTHROW(build_divisor_set(-30));
}

TEST_CASE("gt_injective examples")
{
    Screener sc(30);
    CHECK(sc.report(3).injective);
    CHECK(sc.report(12).injective);
    // Every divisor value at 30 is a non-square and disc != 0.
    ScreeningReport r30 = sc.report(30);
    CHECK(r30.disc_nonzero);
    CHECK(r30.injective);
    CHECK(r30.values[4].value == BigInt(1800));
    CHECK_FALSE(r30.values[4].is_square);
    ScreeningReport r0 = sc.report(0);
    CHECK_FALSE(r0.disc_nonzero);
    CHECK_FALSE(r0.injective);
    ScreeningReport r6 = sc.report(6);
    CHECK(r6.values[4].value == BigInt(216));
    ScreeningReport r4 = sc.report(4);
    CHECK(r4.values[0].is_square);
    CHECK_FALSE(r4.injective);
}

TEST_CASE("screen_range")
{
    Screener sc(30);
    auto all = sc.screen_range(1, 100);
    REQUIRE(all.size() == 100);
    for (std::size_t i = 0; i < all.size(); ++i) {
        REQUIRE(all[i].S0 == static_cast<std::int64_t>(i + 1));
        bool expect = all[i].disc_nonzero;
        for (const auto& v : all[i].values) {
            expect = expect && !v.is_square;
        }
        REQUIRE(all[i].injective == expect);
    }
    auto inj = injective_values(all);
    CHECK(inj == kInjective1To100);
    CHECK(std::vector<std::int64_t>(inj.begin(), inj.begin() + 12) == kListed);
    CHECK(injective_values(sc.screen_range(1, 2)).empty());
    CHECK(injective_values(sc.screen_range(3, 3)) == std::vector<std::int64_t>{3});
    CHECK_THROWS_AS(static_cast<void>(sc.screen_range(5, 4)), std::domain_error);

    ScreenOptions par;
    par.workers = 4;
    auto again = sc.screen_range(1, 100, par);
    CHECK(injective_values(again) == inj);
}

TEST_CASE("specialize")
{
    SpecializedCurve c = specialize(30, 3);
    auto m = jacobian_at(BigInt(30));
    CHECK(c.a4 == evaluate(m.a4, BigInt(3)));
    CHECK(c.a6 == evaluate(m.a6, BigInt(3)));
    CHECK_FALSE(c.disc.is_zero());
    CHECK_THROWS_AS(specialize(30, 0), SingularSpecialization);
    CHECK_THROWS_AS(specialize(30, -30), SingularSpecialization);
}

TEST_CASE("count_points_mod_p")
{
    CHECK(count_points_mod_p(raw_curve(-1, 0), 5) == 8);
    CHECK(count_points_mod_p(raw_curve(0, 1), 5) == 6);
    CHECK_THROWS_AS(count_points_mod_p(raw_curve(-1, 0), 2), std::domain_error);
    CHECK_THROWS_AS(count_points_mod_p(raw_curve(-1, 0), 9), std::domain_error);
    // disc(y^2 = x^3 - x) = 64; disc(y^2 = x^3 + 1) = -432 = -2^4 3^3.
    CHECK_THROWS_AS(count_points_mod_p(raw_curve(0, 1), 3), std::domain_error);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int i = 0; i < 200; ++i) {
        long a4 = coeff(rng);
        long a6 = coeff(rng);
        SpecializedCurve c = raw_curve(a4, a6);
        if (c.disc.is_zero()) {
            continue;
        }
        for (std::uint32_t p : good_reduction_primes(c, 40)) {
            std::uint64_t n = count_points_mod_p(c, p);
            REQUIRE(n == enumerate_points(a4, a6, p));
            double dev = static_cast<double>(n) - static_cast<double>(p) - 1.0;
            REQUIRE(dev * dev <= 4.0 * p);
        }
    }
}

TEST_CASE("integer_roots_cubic")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    for (int i = 0; i < 500; ++i) {
        BigInt r1(dist(rng));
        BigInt r2(dist(rng));
        BigInt r3 = -(r1 + r2);
        BigInt a4 = r1 * r2 + r1 * r3 + r2 * r3;
        BigInt a6 = -(r1 * r2 * r3);
        std::vector<BigInt> expect{r1, r2, r3};
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        REQUIRE(integer_roots_cubic(a4, a6) == expect);
        // Shift the constant term: a root survives only by coincidence.
        for (const BigInt& r : integer_roots_cubic(a4, a6 + BigInt(1))) {
            REQUIRE((r * r * r + a4 * r + a6 + BigInt(1)).is_zero());
        }
    }
    CHECK(integer_roots_cubic(BigInt(0), BigInt(1)) == std::vector<BigInt>{BigInt(-1)});
    CHECK(integer_roots_cubic(BigInt(1), BigInt(1)).empty());
}

TEST_CASE("torsion diagnosis on the listed values")
{
    Screener sc(30);
    for (std::int64_t S0 : kListed) {
        SpecializedCurve c = specialize(sc.model(), 30, S0);
        // (e1(S0), 0) lies on the curve.
        REQUIRE((pow(c.e1, 3) + c.a4 * c.e1 + c.a6).is_zero());
        TorsionDiagnosis d = torsion_diagnosis(c);
        CHECK(d.upper_bound == BigInt(2));
        CHECK(d.two_torsion_points == 1);
        CHECK(d.primes.size() >= 5);
        auto roots = integer_roots_cubic(c.a4, c.a6);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == c.e1);
        // Quadratic cofactor x^2 + e1 x + e1^2 + a4 has non-square discriminant.
        BigInt qd = BigInt(-3) * c.e1 * c.e1 - BigInt(4) * c.a4;
        CHECK_FALSE(is_square(qd));
    }
    SpecializedCurve c3 = specialize(30, 3);
    std::vector<std::uint32_t> few = good_reduction_primes(c3);
    few.resize(4);
    CHECK_THROWS_AS(torsion_diagnosis(c3, few), std::domain_error);
}

TEST_CASE("gcd of point counts is even on the study range")
{
    Screener sc(30);
    ScreenOptions opt;
    opt.torsion = true;
    for (const auto& r : sc.screen_range(1, 40, opt)) {
        REQUIRE(r.torsion.has_value());
        REQUIRE(r.torsion->upper_bound.is_even());
        REQUIRE(r.torsion->two_torsion_points >= 1);
    }
}
