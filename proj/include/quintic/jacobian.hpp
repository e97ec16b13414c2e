#pragma once

#include <stdexcept>
#include <string>

#include "quintic/poly.hpp"
#include "quintic/polyring.hpp"

namespace quintic {

/// An exact polynomial identity failed; carries the residue as text.
class IdentityViolation : public std::runtime_error {
public:
    IdentityViolation(std::string identity, std::string residue)
        : std::runtime_error("identity '" + identity + "' failed, residue: " + residue),
          identity_(std::move(identity)),
          residue_(std::move(residue))
    {
    }
    [[nodiscard]] const std::string& identity() const { return identity_; }
    [[nodiscard]] const std::string& residue() const { return residue_; }

private:
    std::string identity_;
    std::string residue_;
};

/// a u^4 + b u^3 + c u^2 + d u + e with coefficients in a polynomial ring P.
template <typename P>
struct BinaryQuartic {
    P a, b, c, d, e;
};

template <typename P>
struct QuarticInvariants {
    P I;
    P J;
};

/// y^2 = x^3 + a4 x + a6.
template <typename P>
struct WeierstrassModel {
    P a4;
    P a6;

    /// -16 (4 a4^3 + 27 a6^2)
    [[nodiscard]] P discriminant() const
    {
        return P(-16) * (P(4) * a4 * a4 * a4 + P(27) * a6 * a6);
    }
};

/// y^2 = X (X^2 + A X + B) after moving the root e1 to the origin.
template <typename P>
struct TwoTorsionModel {
    P e1;
    P A;
    P B;
    P Delta; // A^2 - 4B
};

/// I = 12ae - 3bd + c^2, J = 72ace + 9bcd - 27ad^2 - 27b^2e - 2c^3.
template <typename P>
QuarticInvariants<P> quartic_invariants(const BinaryQuartic<P>& q)
{
    const auto& [a, b, c, d, e] = q;
    P I = P(12) * a * e - P(3) * b * d + c * c;
    P J = P(72) * a * c * e + P(9) * b * c * d - P(27) * a * d * d - P(27) * b * b * e - P(2) * c * c * c;
    return {std::move(I), std::move(J)};
}

/// y^2 = x^3 - 27 I x - 27 J.
template <typename P>
WeierstrassModel<P> jacobian_model(const QuarticInvariants<P>& inv)
{
    return {P(-27) * inv.I, P(-27) * inv.J};
}

/// Quartic in u of Y^2 = D_Z(S, u): a = 100 S T, c = 200 S^3 T,
/// e = 80 T^6 + 20 T S^5, b = d = 0, with T = S + h.
template <typename P>
BinaryQuartic<P> discriminant_quartic(const P& S, const P& T)
{
    P S3 = S * S * S;
    P T3 = T * T * T;
    return {P(100) * S * T, P(0), P(200) * S3 * T, P(0), P(80) * T3 * T3 + P(20) * T * S3 * S * S};
}

/// -1200 S^3 T
template <typename P>
P two_torsion_root(const P& S, const P& T)
{
    return P(-1200) * S * S * S * T;
}

/// Closed forms of the invariants and Jacobian coefficients.
template <typename P>
P explicit_I(const P& S, const P& T)
{
    return P(32000) * T * T * S * (P(3) * pow(T, 5) + P(2) * pow(S, 5));
}
template <typename P>
P explicit_J(const P& S, const P& T)
{
    return P(12800000) * pow(T, 3) * pow(S, 4) * (P(9) * pow(T, 5) + pow(S, 5));
}
template <typename P>
P explicit_a4(const P& S, const P& T)
{
    return P(-864000) * T * T * S * (P(3) * pow(T, 5) + P(2) * pow(S, 5));
}
template <typename P>
P explicit_a6(const P& S, const P& T)
{
    return P(-345600000) * pow(T, 3) * pow(S, 4) * (P(9) * pow(T, 5) + pow(S, 5));
}

/// Substitutes X = e1 into X^3 + a4 X + a6; throws IdentityViolation on a
/// nonzero residue, otherwise builds A = 3e1, B = 3e1^2 + a4, Delta = A^2 - 4B.
template <typename P, typename Fmt>
TwoTorsionModel<P> verify_two_torsion_root(const WeierstrassModel<P>& model, const P& e1, Fmt&& format)
{
    P residue = e1 * e1 * e1 + model.a4 * e1 + model.a6;
    if (!residue.is_zero()) {
        throw IdentityViolation("F_S(e1) = 0", format(residue));
    }
    P A = P(3) * e1;
    P B = P(3) * e1 * e1 + model.a4;
    P Delta = A * A - P(4) * B;
    return {e1, std::move(A), std::move(B), std::move(Delta)};
}

// Concrete slices.

/// The binary quartic for an integer slice h, as polynomials in S.
BinaryQuartic<ZPoly> discriminant_quartic(const BigInt& h);
/// The binary quartic with h kept symbolic, in Z[h][S].
BinaryQuartic<ZPoly2> discriminant_quartic_symbolic();

/// Jacobian model computed from the invariants.
WeierstrassModel<ZPoly> jacobian_at(const BigInt& h);
WeierstrassModel<ZPoly2> jacobian_symbolic();

TwoTorsionModel<ZPoly> two_torsion_at(const BigInt& h);
TwoTorsionModel<ZPoly2> two_torsion_symbolic();

/// S and h as elements of Z[h][S].
ZPoly2 symbol_S();
ZPoly2 symbol_h();

/// Q5(S, h) = S^5 + 4hS^4 + 8h^2S^3 + 8h^3S^2 + 4h^4S + (4/5)h^5.
QPoly2 q5_symbolic();
QPoly q5_at(const BigRat& h);
/// P(S, h) = S Q5(S, h).
QPoly2 p_symbolic();

/// A^2 - 4B == 12960000 S (S+h)^2 Q5(S,h) in Q[h][S].
bool verify_delta2_factorization();

/// S -> h x maps a4 to h^8 a4u(x) and a6 to h^12 a6u(x).
bool verify_universality_scaling();

/// Coefficients of the h-free model in x.
ZPoly universal_a4();
ZPoly universal_a6();

/// True iff a(S) is not a square in Q(S), i.e. no rational points lie over
/// u = infinity.
bool leading_coefficient_not_square(const ZPoly& a);

/// Same test for a(S) = 100 S (S + h). Throws std::domain_error for h = 0,
/// where the fibration degenerates.
bool check_no_rational_infinity(const BigInt& h);

/// Normalized squarefree part of the model discriminant at slice h; its roots
/// contain every S where the fibre can degenerate.
ZPoly bad_fibre_locus(const BigInt& h);

} // namespace quintic
