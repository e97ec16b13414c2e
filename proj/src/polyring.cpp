#include "quintic/polyring.hpp"

#include "quintic/exactmath.hpp"

#include <stdexcept>
#include <string>

namespace quintic {

BigInt content(const ZPoly& f)
{
    BigInt g(0);
    for (const auto& c : f.coeffs()) {
        g = gcd(g, c);
        if (g == BigInt(1)) {
            break;
        }
    }
    return g;
}

ZPoly primitive_part(const ZPoly& f)
{
    if (f.is_zero()) {
        return f;
    }
    BigInt g = content(f);
    return map_coeffs(f, [&](const BigInt& c) { return c / g; });
}

ZPoly normalize(const ZPoly& f)
{
    if (f.is_zero()) {
        throw std::domain_error("normalize: zero polynomial");
    }
    ZPoly g = primitive_part(f);
    if (g.leading().sign() < 0) {
        g = -g;
    }
    return g;
}

ZPoly pseudo_remainder(const ZPoly& f, const ZPoly& g)
{
    if (g.is_zero()) {
        throw std::domain_error("pseudo_remainder: zero divisor");
    }
    if (f.degree() < g.degree()) {
        return f;
    }
    const BigInt& lc = g.leading();
    int remaining = f.degree() - g.degree() + 1;
    ZPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        auto shift = static_cast<std::size_t>(r.degree() - g.degree());
        ZPoly term = ZPoly::monomial(r.leading(), shift);
        r = lc * r - term * g;
        --remaining;
    }
    if (remaining > 0) {
        r = pow(lc, static_cast<unsigned long>(remaining)) * r;
    }
    return r;
}

std::optional<ZPoly> divide_exact(const ZPoly& f, const ZPoly& g)
{
    if (g.is_zero()) {
        throw std::domain_error("divide_exact: zero divisor");
    }
    if (f.is_zero()) {
        return ZPoly();
    }
    if (f.degree() < g.degree()) {
        return std::nullopt;
    }
    std::vector<BigInt> q(static_cast<std::size_t>(f.degree() - g.degree() + 1), BigInt(0));
    ZPoly r = f;
    const BigInt& lc = g.leading();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        if (!r.leading().divisible_by(lc)) {
            return std::nullopt;
        }
        BigInt c = r.leading() / lc;
        auto shift = static_cast<std::size_t>(r.degree() - g.degree());
        q[shift] = c;
        r -= ZPoly::monomial(c, shift) * g;
    }
    if (!r.is_zero()) {
        return std::nullopt;
    }
    return ZPoly(std::move(q));
}

std::optional<QPoly> divide_exact(const QPoly& f, const QPoly& g)
{
    if (g.is_zero()) {
        throw std::domain_error("divide_exact: zero divisor");
    }
    if (f.is_zero()) {
        return QPoly();
    }
    if (f.degree() < g.degree()) {
        return std::nullopt;
    }
    std::vector<BigRat> q(static_cast<std::size_t>(f.degree() - g.degree() + 1), BigRat(0));
    QPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        BigRat c = r.leading() / g.leading();
        auto shift = static_cast<std::size_t>(r.degree() - g.degree());
        q[shift] = c;
        r -= QPoly::monomial(c, shift) * g;
    }
    if (!r.is_zero()) {
        return std::nullopt;
    }
    return QPoly(std::move(q));
}

ZPoly gcd(const ZPoly& f, const ZPoly& g)
{
    if (f.is_zero() && g.is_zero()) {
        return ZPoly();
    }
    if (f.is_zero()) {
        return normalize(g);
    }
    if (g.is_zero()) {
        return normalize(f);
    }
    ZPoly a = primitive_part(f);
    ZPoly b = primitive_part(g);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    // Subresultant remainder sequence; every division below is exact.
    BigInt lead_prev(1);
    BigInt h(1);
    while (true) {
        int delta = a.degree() - b.degree();
        ZPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) {
            return normalize(b);
        }
        if (r.degree() == 0) {
            return ZPoly{BigInt(1)};
        }
        BigInt divisor = lead_prev * pow(h, static_cast<unsigned long>(delta));
        a = std::move(b);
        b = map_coeffs(r, [&](const BigInt& c) { return c / divisor; });
        lead_prev = a.leading();
        if (delta == 0) {
            continue;
        }
        // h <- lead^delta / h^(delta - 1)
        h = pow(lead_prev, static_cast<unsigned long>(delta)) /
            pow(h, static_cast<unsigned long>(delta - 1));
    }
}

ZPoly squarefree_part(const ZPoly& f)
{
    if (f.is_zero()) {
        throw std::domain_error("squarefree_part: zero polynomial");
    }
    if (f.degree() == 0) {
        return ZPoly{BigInt(1)};
    }
    ZPoly g = gcd(f, derivative(f));
    auto q = divide_exact(primitive_part(f), g);
    if (!q) {
        throw std::logic_error("squarefree_part: gcd does not divide f");
    }
    return normalize(*q);
}

std::optional<QPoly> poly_sqrt(const QPoly& f)
{
    if (f.is_zero()) {
        return QPoly();
    }
    if (f.degree() % 2 != 0) {
        return std::nullopt;
    }
    const BigRat& lc = f.leading();
    if (!is_square_rat(lc)) {
        return std::nullopt;
    }
    auto m = static_cast<std::size_t>(f.degree() / 2);
    std::vector<BigRat> r(m + 1, BigRat(0));
    r[m] = BigRat(isqrt(lc.num()).root, isqrt(lc.den()).root);
    BigRat twice_top = BigRat(2) * r[m];
    // Match coefficients of X^(2m - k) from the top down.
    for (std::size_t k = 1; k <= m; ++k) {
        BigRat acc = f.coeff(2 * m - k);
        for (std::size_t i = m - k + 1; i < m; ++i) {
            std::size_t j = 2 * m - k - i;
            if (j > m - k && j <= m && j != m) {
                acc -= r[i] * r[j];
            }
        }
        r[m - k] = acc / twice_top;
    }
    QPoly root(std::move(r));
    if (root * root != f) {
        return std::nullopt;
    }
    return root;
}

bool is_prime_u32(std::uint32_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

namespace {

// Dense polynomials over F_p, p < 2^31, lowest degree first.
using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1U) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

ModPoly rem(ModPoly a, const ModPoly& m, std::uint64_t p)
{
    trim(a);
    std::uint64_t inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint64_t c = a.back() * inv % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
        }
        trim(a);
    }
    return a;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return rem(std::move(out), m, p);
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        ModPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

bool mod_p_irreducible(const ZPoly& f, std::uint32_t p)
{
    if (!is_prime_u32(p)) {
        throw std::domain_error("mod_p_irreducible: " + std::to_string(p) + " is not prime");
    }
    if (f.is_zero() || f.leading().divisible_by(BigInt(static_cast<long>(p)))) {
        throw std::domain_error("mod_p_irreducible: p divides the leading coefficient");
    }
    int n = f.degree();
    if (n <= 0) {
        return false;
    }
    if (n == 1) {
        return true;
    }
    ModPoly m;
    for (const auto& c : f.coeffs()) {
        m.push_back(c.mod_ui(p));
    }
    std::uint64_t inv = inv_mod(m.back(), p);
    for (auto& c : m) {
        c = c * inv % p;
    }

    // x^(p^i) mod m for i = 1 .. n/2
    ModPoly x{0, 1};
    ModPoly power = x;
    for (int i = 1; i <= n / 2; ++i) {
        ModPoly base = power;
        ModPoly acc{1};
        std::uint64_t e = p;
        while (e > 0) {
            if (e & 1U) {
                acc = mul_mod(acc, base, m, p);
            }
            base = mul_mod(base, base, m, p);
            e >>= 1U;
        }
        power = acc;
        ModPoly diff = power;
        if (diff.size() < 2) {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        ModPoly g = gcd_mod(m, diff, p);
        if (g.size() > 1) {
            return false;
        }
    }
    return true;
}

std::optional<std::uint32_t> find_irreducibility_prime(const ZPoly& f, std::uint32_t limit)
{
    for (std::uint32_t p = 2; p < limit; ++p) {
        if (!is_prime_u32(p) || f.leading().divisible_by(BigInt(static_cast<long>(p)))) {
            continue;
        }
        if (mod_p_irreducible(f, p)) {
            return p;
        }
    }
    return std::nullopt;
}

} // namespace quintic
