#include "quintic/poly.hpp"

#include <stdexcept>

namespace quintic {

QPoly to_rational(const ZPoly& f)
{
    return map_coeffs(f, [](const BigInt& c) { return BigRat(c); });
}

QPoly2 to_rational(const ZPoly2& f)
{
    return map_coeffs(f, [](const ZPoly& c) { return to_rational(c); });
}

ZPoly to_integer(const QPoly& f)
{
    return map_coeffs(f, [](const BigRat& c) {
        if (!c.is_integer()) {
            throw std::domain_error("non-integer coefficient " + c.to_string());
        }
        return c.num();
    });
}

ZPoly2 to_integer(const QPoly2& f)
{
    return map_coeffs(f, [](const QPoly& c) { return to_integer(c); });
}

namespace {

template <typename C>
std::string scalar_text(const C& c)
{
    return c.to_string();
}

template <typename C>
std::string format_scalar_poly(const Poly<C>& f, std::string_view var)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    auto coeffs = f.coeffs();
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const C& c = coeffs[k];
        if (c.is_zero()) {
            continue;
        }
        bool negative = c.sign() < 0;
        C mag = negative ? -c : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += scalar_text(mag);
            continue;
        }
        if (!(mag == C(1))) {
            out += scalar_text(mag) + "*";
        }
        out += var;
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

template <typename C>
std::string format_nested_poly(const Poly<Poly<C>>& f, std::string_view var, std::string_view inner)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    auto coeffs = f.coeffs();
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k].is_zero()) {
            continue;
        }
        if (!first) {
            out += " + ";
        }
        first = false;
        out += "(" + format_scalar_poly(coeffs[k], inner) + ")";
        if (k > 0) {
            out += "*";
            out += var;
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
    }
    return out;
}

} // namespace

std::string to_string(const ZPoly& f, std::string_view var) { return format_scalar_poly(f, var); }
std::string to_string(const QPoly& f, std::string_view var) { return format_scalar_poly(f, var); }

std::string to_string(const ZPoly2& f, std::string_view var, std::string_view inner)
{
    return format_nested_poly(f, var, inner);
}

std::string to_string(const QPoly2& f, std::string_view var, std::string_view inner)
{
    return format_nested_poly(f, var, inner);
}

QPoly parse_qpoly(std::string_view text, std::string_view var)
{
    std::string s;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t' && ch != '\n') {
            s += ch;
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty polynomial text");
    }
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
    };

    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^' && s[i - 1] != '*') {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(s.substr(start));

    QPoly acc;
    for (auto term : terms) {
        bool negative = false;
        if (term[0] == '+' || term[0] == '-') {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) {
            fail("dangling sign");
        }
        BigRat coef(1);
        std::size_t exponent = 0;
        auto vpos = term.find(var);
        std::string coef_text;
        std::string var_text;
        if (vpos == std::string::npos) {
            coef_text = term;
        } else {
            coef_text = term.substr(0, vpos);
            var_text = term.substr(vpos);
            if (!coef_text.empty()) {
                if (coef_text.back() != '*') {
                    fail("expected '*' before variable");
                }
                coef_text.pop_back();
            }
        }
        if (!coef_text.empty()) {
            try {
                coef = BigRat::parse(coef_text);
            } catch (const std::exception&) {
                fail("bad coefficient '" + coef_text + "'");
            }
        }
        if (!var_text.empty()) {
            std::string rest = var_text.substr(var.size());
            if (rest.empty()) {
                exponent = 1;
            } else if (rest[0] == '^' && rest.size() > 1 &&
                       rest.find_first_not_of("0123456789", 1) == std::string::npos) {
                exponent = std::stoul(rest.substr(1));
            } else {
                fail("bad exponent '" + rest + "'");
            }
        }
        if (negative) {
            coef = -coef;
        }
        acc += QPoly::monomial(coef, exponent);
    }
    return acc;
}

ZPoly parse_zpoly(std::string_view text, std::string_view var)
{
    QPoly q = parse_qpoly(text, var);
    try {
        return to_integer(q);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("polynomial has non-integer coefficients: " + std::string(text));
    }
}

} // namespace quintic
