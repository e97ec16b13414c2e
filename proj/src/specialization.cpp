#include "quintic/specialization.hpp"

#include <algorithm>

#include "quintic/exactmath.hpp"
#include "quintic/parallel.hpp"

namespace quintic {

namespace {

ZPoly at_h(const ZPoly2& f, const BigInt& h)
{
    return map_coeffs(f, [&](const ZPoly& c) { return evaluate(c, h); });
}

// unit = f / g, required to be a nonzero rational constant.
std::optional<BigRat> constant_quotient(const ZPoly& f, const ZPoly& g)
{
    auto q = divide_exact(to_rational(f), to_rational(g));
    if (!q || q->degree() != 0) {
        return std::nullopt;
    }
    return q->coeff(0);
}

} // namespace

QPoly2 q4_symbolic()
{
    QPoly2 S = QPoly2::variable();
    QPoly2 h = as_constant(QPoly::variable());
    QPoly2 fifth(QPoly{BigRat(BigInt(1), BigInt(5))});
    return pow(S, 4) + QPoly2(2) * h * pow(S, 3) + QPoly2(2) * pow(h, 2) * pow(S, 2) + pow(h, 3) * S +
           fifth * pow(h, 4);
}

DivisorSet build_divisor_set(std::int64_t h)
{
    if (h == 0) {
        throw std::domain_error("build_divisor_set: h = 0 is degenerate");
    }
    BigInt hb(h);
    DivisorSet set;
    set.h = h;
    TwoTorsionModel<ZPoly> tt = two_torsion_at(hb);
    set.B = tt.B;
    set.Delta = tt.Delta;
    set.q4 = normalize(at_h(to_integer(QPoly2(5) * q4_symbolic()), hb));
    set.q5 = normalize(at_h(to_integer(QPoly2(5) * q5_symbolic()), hb));

    ZPoly S = ZPoly::variable();
    ZPoly T = S + ZPoly(hb);
    auto uB = constant_quotient(set.B, S * T * T * set.q4);
    auto uD = constant_quotient(set.Delta, S * T * T * set.q5);
    if (!uB || !uD) {
        throw FixtureMismatch("B or Delta does not factor as unit * S (S+h)^2 * Q");
    }
    set.unit_B = *uB;
    set.unit_Delta = *uD;
    set.q4_prime = find_irreducibility_prime(set.q4);
    set.q5_prime = find_irreducibility_prime(set.q5);

    std::string t_label = h > 0 ? "S+" + std::to_string(h) : "S" + std::to_string(h);
    struct Atom {
        std::string label;
        ZPoly poly;
    };
    std::vector<Divisor> candidates[3];
    for (const Atom& last : {Atom{"Q4", set.q4}, Atom{"Q5", set.q5}}) {
        Atom atoms[3] = {{"S", S}, {t_label, T}, last};
        for (unsigned mask = 1; mask < 8; ++mask) {
            std::vector<std::string> parts;
            ZPoly prod(1);
            for (unsigned i = 0; i < 3; ++i) {
                if (mask & (1U << i)) {
                    parts.push_back(atoms[i].label);
                    prod *= atoms[i].poly;
                }
            }
            std::string label = parts[0];
            if (parts.size() > 1) {
                label.clear();
                for (const auto& part : parts) {
                    bool compound = part.find_first_of("+-") != std::string::npos;
                    label += (label.empty() ? "" : "*") + (compound ? "(" + part + ")" : part);
                }
            }
            candidates[parts.size() - 1].push_back({label, normalize(prod)});
        }
    }
    for (auto& group : candidates) {
        for (auto& d : group) {
            bool seen = std::any_of(set.divisors.begin(), set.divisors.end(),
                                    [&](const Divisor& e) { return e.poly == d.poly; });
            if (!seen) {
                set.divisors.push_back(std::move(d));
            }
        }
    }
    if (set.divisors.size() != 11) {
        throw FixtureMismatch("divisor set has " + std::to_string(set.divisors.size()) + " elements, expected 11");
    }
    return set;
}

SpecializedCurve specialize(const WeierstrassModel<ZPoly>& model, std::int64_t h, std::int64_t S0)
{
    SpecializedCurve c;
    c.h = h;
    c.S0 = S0;
    BigInt s(S0);
    c.a4 = evaluate(model.a4, s);
    c.a6 = evaluate(model.a6, s);
    c.disc = BigInt(-16) * (BigInt(4) * pow(c.a4, 3) + BigInt(27) * c.a6 * c.a6);
    c.e1 = BigInt(-1200) * pow(s, 3) * (s + BigInt(h));
    if (c.disc.is_zero()) {
        throw SingularSpecialization("specialize: singular curve at S0 = " + std::to_string(S0));
    }
    return c;
}

SpecializedCurve specialize(std::int64_t h, std::int64_t S0)
{
    return specialize(jacobian_at(BigInt(h)), h, S0);
}

std::uint64_t count_points_mod_p(const SpecializedCurve& curve, std::uint32_t p)
{
    if (p == 2 || !is_prime_u32(p)) {
        throw std::domain_error("count_points_mod_p: " + std::to_string(p) + " is not an odd prime");
    }
    if (curve.disc.mod_ui(p) == 0) {
        throw std::domain_error("count_points_mod_p: bad reduction at " + std::to_string(p));
    }
    std::uint64_t a4 = curve.a4.mod_ui(p);
    std::uint64_t a6 = curve.a6.mod_ui(p);
    std::vector<std::uint8_t> square(p, 0);
    for (std::uint64_t y = 1; y < p; ++y) {
        square[y * y % p] = 1;
    }
    std::int64_t chi_sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = (x * x % p * x + a4 * x + a6) % p;
        if (v != 0) {
            chi_sum += square[v] ? 1 : -1;
        }
    }
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + chi_sum);
}

std::vector<std::uint32_t> good_reduction_primes(const SpecializedCurve& curve, std::uint32_t limit)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 3; p < limit; p += 2) {
        if (is_prime_u32(p) && curve.disc.mod_ui(p) != 0) {
            out.push_back(p);
        }
    }
    return out;
}

std::vector<BigInt> integer_roots_cubic(const BigInt& a4, const BigInt& a6)
{
    auto f = [&](const BigInt& x) { return x * x * x + a4 * x + a6; };
    BigInt bound = BigInt(1) + std::max(abs(a4), abs(a6));

    // Integer root of f on [lo, hi] where f is monotone.
    auto search = [&](BigInt lo, BigInt hi) -> std::optional<BigInt> {
        if (lo > hi) {
            return std::nullopt;
        }
        BigInt flo = f(lo);
        BigInt fhi = f(hi);
        if (flo.is_zero()) {
            return lo;
        }
        if (fhi.is_zero()) {
            return hi;
        }
        if (flo.sign() == fhi.sign()) {
            return std::nullopt;
        }
        while (hi - lo > BigInt(1)) {
            BigInt mid = floor_div(lo + hi, BigInt(2));
            BigInt fm = f(mid);
            if (fm.is_zero()) {
                return mid;
            }
            if (fm.sign() == flo.sign()) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return std::nullopt;
    };

    std::vector<std::pair<BigInt, BigInt>> pieces;
    if (a4.sign() >= 0) {
        pieces.emplace_back(-bound, bound);
    } else {
        // Critical points at +-sqrt(-a4/3), with c <= sqrt(-a4/3) < c + 1.
        BigInt c = isqrt(floor_div(-a4, BigInt(3))).root;
        pieces.emplace_back(-bound, -c - BigInt(1));
        pieces.emplace_back(-c, c);
        pieces.emplace_back(c + BigInt(1), bound);
    }
    std::vector<BigInt> roots;
    for (const auto& [lo, hi] : pieces) {
        if (auto r = search(lo, hi)) {
            roots.push_back(*r);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

TorsionDiagnosis torsion_diagnosis(const SpecializedCurve& curve, const std::vector<std::uint32_t>& primes)
{
    if (primes.size() < 5) {
        throw std::domain_error("torsion_diagnosis: insufficient evidence, need at least 5 primes");
    }
    TorsionDiagnosis d;
    d.primes = primes;
    BigInt g(0);
    for (std::uint32_t p : primes) {
        g = gcd(g, BigInt(static_cast<unsigned long>(count_points_mod_p(curve, p))));
    }
    d.upper_bound = g;
    d.two_torsion_points = static_cast<int>(integer_roots_cubic(curve.a4, curve.a6).size());
    return d;
}

TorsionDiagnosis torsion_diagnosis(const SpecializedCurve& curve)
{
    return torsion_diagnosis(curve, good_reduction_primes(curve));
}

Screener::Screener(std::int64_t h)
    : h_(h), set_(build_divisor_set(h)), model_(jacobian_at(BigInt(h))), disc_(model_.discriminant())
{
}

ScreeningReport Screener::report(std::int64_t S0, bool torsion) const
{
    ScreeningReport r;
    r.S0 = S0;
    BigInt s(S0);
    bool all_nonsquare = true;
    for (const auto& d : set_.divisors) {
        BigInt v = evaluate(d.poly, s);
        bool sq = is_square_rat(BigRat(v));
        all_nonsquare = all_nonsquare && !sq;
        r.values.push_back({d.label, std::move(v), sq});
    }
    r.disc_nonzero = !evaluate(disc_, s).is_zero();
    r.injective = all_nonsquare && r.disc_nonzero;
    if (torsion && r.disc_nonzero) {
        r.torsion = torsion_diagnosis(specialize(model_, h_, S0));
    }
    return r;
}

std::vector<ScreeningReport> Screener::screen_range(std::int64_t lo, std::int64_t hi,
                                                    const ScreenOptions& options) const
{
    if (lo > hi) {
        throw std::domain_error("screen_range: lo > hi");
    }
    auto n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<ScreeningReport> out(n);
    parallel_for(n, options.workers, [&](std::size_t i) {
        out[i] = report(lo + static_cast<std::int64_t>(i), options.torsion);
    });
    return out;
}

ScreeningReport gt_injective(std::int64_t h, std::int64_t S0) { return Screener(h).report(S0); }

std::vector<std::int64_t> injective_values(const std::vector<ScreeningReport>& reports)
{
    std::vector<std::int64_t> out;
    for (const auto& r : reports) {
        if (r.injective) {
            out.push_back(r.S0);
        }
    }
    return out;
}

} // namespace quintic
