#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quintic {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over a GMP integer. Zero has no sign, and decimal
/// printing followed by parsing is the identity.
class BigInt {
public:
    BigInt() = default;
    BigInt(long v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
    BigInt(int v) : v_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    BigInt(long long v);                      // NOLINT(google-explicit-constructor)
    BigInt(unsigned long v) : v_(v) {}        // NOLINT(google-explicit-constructor)
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal string. Throws std::invalid_argument.
    static BigInt parse(std::string_view text);

    [[nodiscard]] std::string to_string() const { return v_.get_str(10); }

    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    [[nodiscard]] bool is_even() const { return !is_odd(); }
    [[nodiscard]] bool fits_long() const { return v_.fits_slong_p(); }
    [[nodiscard]] long to_long() const;
    [[nodiscard]] std::size_t bit_length() const;

    /// Nonnegative residue modulo m (m > 0).
    [[nodiscard]] unsigned long mod_ui(unsigned long m) const;
    [[nodiscard]] bool divisible_by(const BigInt& d) const;

    [[nodiscard]] const mpz_class& raw() const { return v_; }

    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
    /// Truncating division; throws std::domain_error on zero divisor.
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
    friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b)
    {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

BigInt abs(const BigInt& v);
BigInt pow(const BigInt& base, unsigned long exponent);
BigInt gcd(const BigInt& a, const BigInt& b);
/// Floor division and the matching nonnegative-divisor remainder.
BigInt floor_div(const BigInt& a, const BigInt& b);

} // namespace quintic
