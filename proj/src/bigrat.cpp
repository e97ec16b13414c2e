#include "quintic/bigrat.hpp"

#include <ostream>
#include <stdexcept>

namespace quintic {

BigRat::BigRat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw std::domain_error("BigRat: zero denominator");
    }
    reduce();
}

void BigRat::reduce()
{
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ /= g;
        den_ /= g;
    }
}

BigRat BigRat::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRat(BigInt::parse(text));
    }
    return BigRat(BigInt::parse(text.substr(0, slash)), BigInt::parse(text.substr(slash + 1)));
}

std::string BigRat::to_string() const
{
    if (is_integer()) {
        return num_.to_string();
    }
    return num_.to_string() + "/" + den_.to_string();
}

BigRat& BigRat::operator+=(const BigRat& o)
{
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

BigRat& BigRat::operator-=(const BigRat& o)
{
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

BigRat& BigRat::operator*=(const BigRat& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

BigRat& BigRat::operator/=(const BigRat& o)
{
    if (o.is_zero()) {
        throw std::domain_error("BigRat: division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

BigRat operator-(const BigRat& a)
{
    BigRat r = a;
    r.num_ = -r.num_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRat& v)
{
    return os << v.to_string();
}

BigRat pow(const BigRat& base, unsigned long exponent)
{
    return BigRat(pow(base.num(), exponent), pow(base.den(), exponent));
}

} // namespace quintic
