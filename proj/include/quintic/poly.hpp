#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "quintic/bigint.hpp"
#include "quintic/bigrat.hpp"

namespace quintic {

/// Dense univariate polynomial over a commutative ring R, coefficients stored
/// lowest degree first. The leading stored coefficient is never zero, so the
/// zero polynomial has no coefficients.
///
/// R may itself be a Poly, which is how bivariate polynomials in (S, h) are
/// built: Poly<Poly<BigInt>> is a polynomial in S whose coefficients are
/// polynomials in h.
template <typename R>
class Poly {
public:
    using coeff_type = R;

    Poly() = default;
    template <std::integral I>
    explicit Poly(I c) : Poly(R(c)) {}
    explicit Poly(R c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

    /// c * X^k.
    static Poly monomial(R c, std::size_t k)
    {
        std::vector<R> v(k + 1, R(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    /// The indeterminate X.
    static Poly variable() { return monomial(R(1), 1); }

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    [[nodiscard]] std::span<const R> coeffs() const { return coeffs_; }
    [[nodiscard]] R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }
    [[nodiscard]] const R& leading() const { return coeffs_.back(); }
    [[nodiscard]] std::size_t term_count() const
    {
        std::size_t n = 0;
        for (const auto& c : coeffs_) {
            n += is_zero_coeff(c) ? 0 : 1;
        }
        return n;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), R(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), R(0));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a)
    {
        Poly r = a;
        for (auto& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Poly();
        }
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero_coeff(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(const R& c, const Poly& f)
    {
        std::vector<R> out;
        out.reserve(f.coeffs_.size());
        for (const auto& x : f.coeffs_) {
            out.push_back(c * x);
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& f, const R& c) { return c * f; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    static bool is_zero_coeff(const R& c) { return c.is_zero(); }

    void trim()
    {
        while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<R> coeffs_;
};

using ZPoly = Poly<BigInt>;
using QPoly = Poly<BigRat>;
/// Polynomial in S with coefficients in Z[h].
using ZPoly2 = Poly<ZPoly>;
/// Polynomial in S with coefficients in Q[h].
using QPoly2 = Poly<QPoly>;

template <typename R>
Poly<R> pow(const Poly<R>& base, unsigned exponent)
{
    Poly<R> result(R(1));
    Poly<R> b = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

/// Horner evaluation at a value of a ring V that R embeds into.
template <typename R, typename V>
V evaluate(const Poly<R>& f, const V& x)
{
    V acc = V(0);
    auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x;
        acc += V(c[i]);
    }
    return acc;
}

/// f(g(X)).
template <typename R>
Poly<R> compose(const Poly<R>& f, const Poly<R>& g)
{
    Poly<R> acc;
    auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * g + Poly<R>(c[i]);
    }
    return acc;
}

template <typename R>
Poly<R> derivative(const Poly<R>& f)
{
    auto c = f.coeffs();
    if (c.size() <= 1) {
        return Poly<R>();
    }
    std::vector<R> out;
    out.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        out.push_back(R(static_cast<long>(i)) * c[i]);
    }
    return Poly<R>(std::move(out));
}

/// Applies fn to every coefficient.
template <typename R, typename Fn>
auto map_coeffs(const Poly<R>& f, Fn&& fn)
{
    using U = std::decay_t<std::invoke_result_t<Fn&, const R&>>;
    std::vector<U> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        out.push_back(fn(c));
    }
    return Poly<U>(std::move(out));
}

/// Embeds a polynomial over R as constant coefficients of an outer variable,
/// e.g. a polynomial in h viewed inside Z[h][S].
template <typename R>
Poly<Poly<R>> as_constant(const Poly<R>& c)
{
    return Poly<Poly<R>>(c);
}

/// Lifts every coefficient of f into the constants of an inner ring,
/// e.g. Z[x] into Z[h][x].
template <typename R>
Poly<Poly<R>> lift_coeffs(const Poly<R>& f)
{
    return map_coeffs(f, [](const R& c) { return Poly<R>(c); });
}

/// Swaps the two variables of a bivariate polynomial.
template <typename R>
Poly<Poly<R>> swap_variables(const Poly<Poly<R>>& f)
{
    std::size_t inner_len = 0;
    for (const auto& c : f.coeffs()) {
        inner_len = std::max(inner_len, c.coeffs().size());
    }
    std::vector<std::vector<R>> grid(inner_len, std::vector<R>(f.coeffs().size(), R(0)));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        auto inner = f.coeffs()[i].coeffs();
        for (std::size_t j = 0; j < inner.size(); ++j) {
            grid[j][i] = inner[j];
        }
    }
    std::vector<Poly<R>> out;
    out.reserve(inner_len);
    for (auto& row : grid) {
        out.emplace_back(std::move(row));
    }
    return Poly<Poly<R>>(std::move(out));
}

QPoly to_rational(const ZPoly& f);
QPoly2 to_rational(const ZPoly2& f);
/// Throws std::domain_error when a coefficient is not an integer.
ZPoly to_integer(const QPoly& f);
ZPoly2 to_integer(const QPoly2& f);

// Text form "c_k*S^k + ... + c_0", highest degree first. Nested coefficients
// are parenthesised and use the next variable name.
std::string to_string(const ZPoly& f, std::string_view var = "S");
std::string to_string(const QPoly& f, std::string_view var = "S");
std::string to_string(const ZPoly2& f, std::string_view var = "S", std::string_view inner = "h");
std::string to_string(const QPoly2& f, std::string_view var = "S", std::string_view inner = "h");

/// Parses the univariate text form; accepts integer or p/q coefficients.
/// Throws std::invalid_argument on malformed input.
QPoly parse_qpoly(std::string_view text, std::string_view var = "S");
ZPoly parse_zpoly(std::string_view text, std::string_view var = "S");

} // namespace quintic
