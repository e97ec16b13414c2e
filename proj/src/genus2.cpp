#include "quintic/genus2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "quintic/exactmath.hpp"
#include "quintic/jacobian.hpp"
#include "quintic/parallel.hpp"
#include "quintic/polyring.hpp"

namespace quintic {

ZPoly SexticModel::poly() const { return ZPoly(std::vector<BigInt>(coeffs.begin(), coeffs.end())); }

BigInt SexticModel::homogeneous(const BigInt& p, const BigInt& q) const
{
    BigInt acc(0);
    BigInt qpow(1);
    std::array<BigInt, 7> ppow;
    ppow[0] = BigInt(1);
    for (std::size_t i = 1; i < 7; ++i) {
        ppow[i] = ppow[i - 1] * p;
    }
    for (std::size_t i = 7; i-- > 0;) {
        acc += coeffs[i] * ppow[i] * qpow;
        qpow = qpow * q;
    }
    return acc;
}

QPoly normalized_sextic()
{
    return QPoly{BigRat(0), BigRat(BigInt(4), BigInt(5)), BigRat(4), BigRat(8), BigRat(8), BigRat(4), BigRat(1)};
}

SexticModel universal_curve()
{
    SexticModel m{{BigInt(0), BigInt(20), BigInt(100), BigInt(200), BigInt(200), BigInt(100), BigInt(25)}};
    ZPoly f = m.poly();
    if (to_rational(f) != QPoly(BigRat(25)) * normalized_sextic()) {
        throw IdentityViolation("f = 25 g", to_string(to_rational(f) - QPoly(BigRat(25)) * normalized_sextic(), "x"));
    }
    ZPoly g = gcd(f, derivative(f));
    if (g.degree() != 0) {
        throw IdentityViolation("gcd(f, f') = 1", to_string(g, "x"));
    }
    return m;
}

namespace {

std::uint64_t mod_m(std::int64_t v)
{
    auto m = static_cast<std::int64_t>(kSquareSieveModulus);
    return static_cast<std::uint64_t>(((v % m) + m) % m);
}

struct QChunk {
    std::uint64_t candidates = 0;
    std::uint64_t survivors = 0;
    std::vector<RationalPointRecord> points;
};

} // namespace

PointScanResult bounded_height_scan(const SexticModel& curve, std::int64_t H, unsigned workers)
{
    if (H < 1) {
        throw std::domain_error("bounded_height_scan: H must be positive");
    }
    const std::uint64_t M = kSquareSieveModulus;
    std::array<std::uint64_t, 7> cm{};
    for (std::size_t i = 0; i < 7; ++i) {
        cm[i] = curve.coeffs[i].mod_ui(static_cast<unsigned long>(M));
    }
    auto n = static_cast<std::size_t>(H);
    std::vector<QChunk> chunks(n);
    parallel_for(n, workers, [&](std::size_t idx) {
        auto q = static_cast<std::int64_t>(idx + 1);
        QChunk& out = chunks[idx];
        std::array<std::uint64_t, 7> qp{};
        qp[0] = 1;
        for (std::size_t i = 1; i < 7; ++i) {
            qp[i] = qp[i - 1] * mod_m(q) % M;
        }
        for (std::int64_t p = -H; p <= H; ++p) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            ++out.candidates;
            std::uint64_t pm = mod_m(p);
            std::uint64_t acc = 0;
            std::uint64_t pp = 1;
            for (std::size_t i = 0; i < 7; ++i) {
                acc = (acc + cm[i] * pp % M * qp[6 - i]) % M;
                pp = pp * pm % M;
            }
            if (!passes_square_sieve_residue(acc)) {
                continue;
            }
            ++out.survivors;
            BigInt v = curve.homogeneous(BigInt(p), BigInt(q));
            BigInt root;
            if (v.sign() < 0 || !exact_sqrt(v, root)) {
                continue;
            }
            // Y = root / q^3
            BigRat x{BigInt(p), BigInt(q)};
            BigRat y(root, pow(BigInt(q), 3));
            BigInt height = std::max(abs(BigInt(p)), BigInt(q));
            out.points.push_back({false, x, y, height});
            if (!root.is_zero()) {
                out.points.push_back({false, x, -y, height});
            }
        }
    });

    PointScanResult result;
    result.height = H;
    for (auto& c : chunks) {
        result.candidates += c.candidates;
        result.sieve_survivors += c.survivors;
        for (auto& pt : c.points) {
            result.points.push_back(std::move(pt));
        }
    }
    std::sort(result.points.begin(), result.points.end(), [](const auto& a, const auto& b) {
        return a.x != b.x ? a.x < b.x : a.Y < b.Y;
    });
    BigInt lead = curve.coeffs[6];
    BigInt lead_root;
    if (exact_sqrt(lead, lead_root)) {
        result.points.push_back({true, BigRat(0), BigRat(lead_root), BigInt(0)});
        result.points.push_back({true, BigRat(0), BigRat(-lead_root), BigInt(0)});
    }
    return result;
}

PSquareCheck p_square_screen(const BigRat& S, const BigRat& h)
{
    if (S.is_zero() || h.is_zero()) {
        throw std::domain_error("p_square_screen: S and h must be nonzero");
    }
    static const QPoly2 P = p_symbolic();
    PSquareCheck r;
    r.value = evaluate(map_coeffs(P, [&](const QPoly& c) { return evaluate(c, h); }), S);
    r.is_square = is_square_rat(r.value);
    r.homogeneity_holds = r.value == pow(h, 6) * evaluate(normalized_sextic(), S / h);
    return r;
}

GridScreen p_square_grid(std::int64_t smax, std::int64_t hmax, std::int64_t step, unsigned workers)
{
    if (smax < 1 || hmax < step || step < 1) {
        throw std::domain_error("p_square_grid: empty grid");
    }
    std::vector<std::int64_t> hs;
    for (std::int64_t h = -(hmax / step) * step; h <= hmax; h += step) {
        if (h != 0) {
            hs.push_back(h);
        }
    }
    std::vector<GridScreen> parts(hs.size());
    parallel_for(hs.size(), workers, [&](std::size_t i) {
        for (std::int64_t S = -smax; S <= smax; ++S) {
            if (S == 0) {
                continue;
            }
            PSquareCheck c = p_square_screen(BigRat(BigInt(S)), BigRat(BigInt(hs[i])));
            ++parts[i].tested;
            if (!c.homogeneity_holds) {
                ++parts[i].homogeneity_failures;
            }
            if (c.is_square) {
                parts[i].squares.emplace_back(S, hs[i]);
            }
        }
    });
    GridScreen out;
    for (auto& p : parts) {
        out.tested += p.tested;
        out.homogeneity_failures += p.homogeneity_failures;
        out.squares.insert(out.squares.end(), p.squares.begin(), p.squares.end());
    }
    return out;
}

std::vector<std::int64_t> delta2_square_values(std::int64_t h, std::int64_t lo, std::int64_t hi, unsigned workers)
{
    if (lo > hi) {
        throw std::domain_error("delta2_square_values: lo > hi");
    }
    ZPoly delta = two_torsion_at(BigInt(h)).Delta;
    auto n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::uint8_t> square(n, 0);
    parallel_for(n, workers, [&](std::size_t i) {
        square[i] = is_square(evaluate(delta, BigInt(lo + static_cast<std::int64_t>(i)))) ? 1 : 0;
    });
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (square[i]) {
            out.push_back(lo + static_cast<std::int64_t>(i));
        }
    }
    return out;
}

bool verify_delta2_p_consistency()
{
    QPoly2 delta = to_rational(two_torsion_symbolic().Delta);
    QPoly2 T = QPoly2::variable() + as_constant(QPoly::variable());
    QPoly2 divisor = QPoly2(12960000) * T * T;
    // Long division in S; the divisor's leading coefficient is a nonzero rational.
    BigRat inv = BigRat(1) / divisor.leading().coeff(0);
    std::vector<QPoly> q(static_cast<std::size_t>(delta.degree() - divisor.degree() + 1));
    QPoly2 r = delta;
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        QPoly c = inv * r.leading();
        auto shift = static_cast<std::size_t>(r.degree() - divisor.degree());
        q[shift] = c;
        r -= QPoly2::monomial(c, shift) * divisor;
    }
    return r.is_zero() && QPoly2(std::move(q)) == p_symbolic();
}

} // namespace quintic
