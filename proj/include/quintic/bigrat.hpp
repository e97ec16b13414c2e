#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "quintic/bigint.hpp"

namespace quintic {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(long v) : num_(v), den_(1) {}   // NOLINT(google-explicit-constructor)
    BigRat(int v) : num_(v), den_(1) {}    // NOLINT(google-explicit-constructor)
    BigRat(BigInt v) : num_(std::move(v)), den_(1) {} // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den is zero.
    BigRat(BigInt num, BigInt den);

    /// Accepts "p" or "p/q".
    static BigRat parse(std::string_view text);

    [[nodiscard]] const BigInt& num() const { return num_; }
    [[nodiscard]] const BigInt& den() const { return den_; }
    [[nodiscard]] bool is_integer() const { return den_ == BigInt(1); }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] int sign() const { return num_.sign(); }
    [[nodiscard]] std::string to_string() const;

    BigRat& operator+=(const BigRat& o);
    BigRat& operator-=(const BigRat& o);
    BigRat& operator*=(const BigRat& o);
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
    friend BigRat operator-(const BigRat& a);

    friend bool operator==(const BigRat& a, const BigRat& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b)
    {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    void reduce();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& v);

BigRat pow(const BigRat& base, unsigned long exponent);

} // namespace quintic
