#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintic/jacobian.hpp"

namespace quintic {

/// The divisor data does not match the expected structure.
class FixtureMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Q4(S, h) = S^4 + 2hS^3 + 2h^2S^2 + h^3S + h^4/5.
QPoly2 q4_symbolic();

struct Divisor {
    std::string label;
    ZPoly poly;
};

/// Squarefree divisors of S(S+h)Q4 and S(S+h)Q5 built from the certified
/// factorizations of B and Delta.
struct DivisorSet {
    std::int64_t h = 0;
    ZPoly B;
    ZPoly Delta;
    ZPoly q4; // normalized
    ZPoly q5; // normalized
    BigRat unit_B;
    BigRat unit_Delta;
    std::optional<std::uint32_t> q4_prime; // mod-p irreducibility certificates
    std::optional<std::uint32_t> q5_prime;
    std::vector<Divisor> divisors;
};

/// Verifies B = unit S (S+h)^2 Q4 and Delta = unit S (S+h)^2 Q5 and returns
/// the deduplicated nonempty subset products. Throws FixtureMismatch if a
/// claim fails or the set does not have 11 elements; std::domain_error for h = 0.
DivisorSet build_divisor_set(std::int64_t h);

struct TorsionDiagnosis {
    BigInt upper_bound;
    int two_torsion_points = 0;
    std::vector<std::uint32_t> primes;
};

struct DivisorValue {
    std::string label;
    BigInt value;
    bool is_square = false;
};

struct ScreeningReport {
    std::int64_t S0 = 0;
    std::vector<DivisorValue> values;
    bool disc_nonzero = false;
    bool injective = false;
    std::optional<TorsionDiagnosis> torsion;
};

struct SpecializedCurve {
    std::int64_t h = 0;
    std::int64_t S0 = 0;
    BigInt a4;
    BigInt a6;
    BigInt disc;
    BigInt e1; // the 2-torsion abscissa -1200 S0^3 (S0 + h)
};

class SingularSpecialization : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// a4, a6 of the Jacobian at (h, S0). Throws SingularSpecialization if disc = 0.
SpecializedCurve specialize(std::int64_t h, std::int64_t S0);

/// Same, from a precomputed model.
SpecializedCurve specialize(const WeierstrassModel<ZPoly>& model, std::int64_t h, std::int64_t S0);

/// #E(F_p) including infinity. Throws std::domain_error unless p is an odd
/// prime not dividing disc.
std::uint64_t count_points_mod_p(const SpecializedCurve& curve, std::uint32_t p);

/// Odd primes below `limit` not dividing disc.
std::vector<std::uint32_t> good_reduction_primes(const SpecializedCurve& curve, std::uint32_t limit = 200);

/// Distinct integer roots of x^3 + a4 x + a6, ascending. For a monic integer
/// cubic these are all its rational roots.
std::vector<BigInt> integer_roots_cubic(const BigInt& a4, const BigInt& a6);

/// upper_bound = gcd of #E(F_p) over `primes`; two_torsion_points = number of
/// rational roots of the cubic. Throws std::domain_error for fewer than 5 primes.
TorsionDiagnosis torsion_diagnosis(const SpecializedCurve& curve, const std::vector<std::uint32_t>& primes);

/// Default evidence: all odd good primes below 200.
TorsionDiagnosis torsion_diagnosis(const SpecializedCurve& curve);

struct ScreenOptions {
    bool torsion = false;
    unsigned workers = 1;
};

/// Injectivity screening on one slice.
class Screener {
public:
    explicit Screener(std::int64_t h);

    [[nodiscard]] const DivisorSet& divisor_set() const { return set_; }
    [[nodiscard]] const WeierstrassModel<ZPoly>& model() const { return model_; }

    /// injective iff every divisor value is a non-square and disc != 0.
    [[nodiscard]] ScreeningReport report(std::int64_t S0, bool torsion = false) const;

    /// Reports for lo..hi in order. Throws std::domain_error if lo > hi.
    [[nodiscard]] std::vector<ScreeningReport> screen_range(std::int64_t lo, std::int64_t hi,
                                                            const ScreenOptions& options = {}) const;

private:
    std::int64_t h_;
    DivisorSet set_;
    WeierstrassModel<ZPoly> model_;
    ZPoly disc_;
};

/// Convenience wrappers on a fresh Screener.
ScreeningReport gt_injective(std::int64_t h, std::int64_t S0);
std::vector<std::int64_t> injective_values(const std::vector<ScreeningReport>& reports);

} // namespace quintic
