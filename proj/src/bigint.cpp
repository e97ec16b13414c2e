#include "quintic/bigint.hpp"

#include <ostream>
#include <stdexcept>

namespace quintic {

BigInt::BigInt(long long v)
{
    static_assert(sizeof(long long) == sizeof(long), "LP64 platform expected");
    v_ = static_cast<long>(v);
}

BigInt BigInt::parse(std::string_view text)
{
    std::string s(text);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        throw std::invalid_argument("BigInt: empty number '" + s + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') {
            throw std::invalid_argument("BigInt: invalid digit in '" + s + "'");
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return BigInt(mpz_class(s, 10));
}

long BigInt::to_long() const
{
    if (!fits_long()) {
        throw std::overflow_error("BigInt: value does not fit in long: " + to_string());
    }
    return v_.get_si();
}

std::size_t BigInt::bit_length() const
{
    if (is_zero()) {
        return 0;
    }
    return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

unsigned long BigInt::mod_ui(unsigned long m) const
{
    if (m == 0) {
        throw std::domain_error("BigInt: modulus zero");
    }
    return mpz_fdiv_ui(v_.get_mpz_t(), m);
}

bool BigInt::divisible_by(const BigInt& d) const
{
    if (d.is_zero()) {
        return is_zero();
    }
    return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
}

BigInt& BigInt::operator/=(const BigInt& o)
{
    if (o.is_zero()) {
        throw std::domain_error("BigInt: division by zero");
    }
    mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o)
{
    if (o.is_zero()) {
        throw std::domain_error("BigInt: division by zero");
    }
    mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v)
{
    return os << v.to_string();
}

BigInt abs(const BigInt& v)
{
    return BigInt(mpz_class(::abs(v.raw())));
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
    return BigInt(std::move(r));
}

BigInt gcd(const BigInt& a, const BigInt& b)
{
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(r));
}

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    if (b.is_zero()) {
        throw std::domain_error("BigInt: division by zero");
    }
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(r));
}

} // namespace quintic
