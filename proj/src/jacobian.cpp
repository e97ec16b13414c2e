#include "quintic/jacobian.hpp"

#include <stdexcept>

namespace quintic {

namespace {

ZPoly slice_S() { return ZPoly::variable(); }

QPoly2 q_symbol_S() { return QPoly2::variable(); }
QPoly2 q_symbol_h() { return as_constant(QPoly::variable()); }

std::string format_z(const ZPoly& f) { return to_string(f); }
std::string format_z2(const ZPoly2& f) { return to_string(f); }

} // namespace

ZPoly2 symbol_S() { return ZPoly2::variable(); }
ZPoly2 symbol_h() { return as_constant(ZPoly::variable()); }

BinaryQuartic<ZPoly> discriminant_quartic(const BigInt& h)
{
    ZPoly S = slice_S();
    return discriminant_quartic(S, S + ZPoly(h));
}

BinaryQuartic<ZPoly2> discriminant_quartic_symbolic()
{
    ZPoly2 S = symbol_S();
    return discriminant_quartic(S, S + symbol_h());
}

WeierstrassModel<ZPoly> jacobian_at(const BigInt& h)
{
    return jacobian_model(quartic_invariants(discriminant_quartic(h)));
}

WeierstrassModel<ZPoly2> jacobian_symbolic()
{
    return jacobian_model(quartic_invariants(discriminant_quartic_symbolic()));
}

TwoTorsionModel<ZPoly> two_torsion_at(const BigInt& h)
{
    ZPoly S = slice_S();
    return verify_two_torsion_root(jacobian_at(h), two_torsion_root(S, S + ZPoly(h)), format_z);
}

TwoTorsionModel<ZPoly2> two_torsion_symbolic()
{
    ZPoly2 S = symbol_S();
    return verify_two_torsion_root(jacobian_symbolic(), two_torsion_root(S, S + symbol_h()), format_z2);
}

QPoly2 q5_symbolic()
{
    QPoly2 S = q_symbol_S();
    QPoly2 h = q_symbol_h();
    QPoly2 four_fifths(QPoly{BigRat(BigInt(4), BigInt(5))});
    return pow(S, 5) + QPoly2(4) * h * pow(S, 4) + QPoly2(8) * pow(h, 2) * pow(S, 3) +
           QPoly2(8) * pow(h, 3) * pow(S, 2) + QPoly2(4) * pow(h, 4) * S + four_fifths * pow(h, 5);
}

QPoly q5_at(const BigRat& h)
{
    return map_coeffs(q5_symbolic(), [&](const QPoly& c) { return evaluate(c, h); });
}

QPoly2 p_symbolic() { return q_symbol_S() * q5_symbolic(); }

bool verify_delta2_factorization()
{
    QPoly2 delta = to_rational(two_torsion_symbolic().Delta);
    QPoly2 S = q_symbol_S();
    QPoly2 T = S + q_symbol_h();
    QPoly2 claim = QPoly2(12960000) * S * T * T * q5_symbolic();
    return delta == claim;
}

ZPoly universal_a4()
{
    ZPoly x = ZPoly::variable();
    ZPoly x1 = x + ZPoly(1);
    return ZPoly(-864000) * x * x1 * x1 * (ZPoly(3) * pow(x1, 5) + ZPoly(2) * pow(x, 5));
}

ZPoly universal_a6()
{
    ZPoly x = ZPoly::variable();
    ZPoly x1 = x + ZPoly(1);
    return ZPoly(-345600000) * pow(x1, 3) * pow(x, 4) * (ZPoly(9) * pow(x1, 5) + pow(x, 5));
}

bool verify_universality_scaling()
{
    WeierstrassModel<ZPoly2> model = jacobian_symbolic();
    ZPoly2 hx{ZPoly(0), ZPoly::variable()};
    ZPoly h = ZPoly::variable();
    ZPoly2 a4 = compose(model.a4, hx);
    ZPoly2 a6 = compose(model.a6, hx);
    return a4 == as_constant(pow(h, 8)) * lift_coeffs(universal_a4()) &&
           a6 == as_constant(pow(h, 12)) * lift_coeffs(universal_a6());
}

bool leading_coefficient_not_square(const ZPoly& a)
{
    if (a.is_zero()) {
        return false;
    }
    return !poly_sqrt(to_rational(a)).has_value();
}

bool check_no_rational_infinity(const BigInt& h)
{
    if (h.is_zero()) {
        throw std::domain_error("check_no_rational_infinity: h = 0 is degenerate");
    }
    return leading_coefficient_not_square(discriminant_quartic(h).a);
}

ZPoly bad_fibre_locus(const BigInt& h)
{
    return squarefree_part(jacobian_at(h).discriminant());
}

} // namespace quintic
