#include "quintic/slice.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "quintic/exactmath.hpp"

namespace quintic {

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::FailSquareD: return "fail_square_D";
    case Verdict::FailIntegralZ: return "fail_integral_Z";
    case Verdict::FailNonnegZ: return "fail_nonneg_Z";
    case Verdict::FailSquareZ: return "fail_square_Z";
    case Verdict::FailParity: return "fail_parity";
    case Verdict::FailSize: return "fail_size";
    case Verdict::Solution: return "solution";
    }
    return "unknown";
}

bool mdo_admissible(std::int64_t h)
{
    return h % 30 == 0;
}

bool mdo_verify_congruence(int p)
{
    if (p != 2 && p != 3 && p != 5) {
        throw std::domain_error("mdo_verify_congruence: x^5 = x only holds for p in {2,3,5}, got " +
                                std::to_string(p));
    }
    for (int x = 0; x < p; ++x) {
        int x5 = 1;
        for (int k = 0; k < 5; ++k) {
            x5 = (x5 * x) % p;
        }
        if (x5 != x) {
            return false;
        }
    }
    return true;
}

BigInt sym_L(const BigInt& S, const BigInt& u)
{
    BigInt S2 = S * S;
    BigInt u2 = u * u;
    return S2 * S2 * S + BigInt(10) * S2 * S * u2 + BigInt(5) * S * u2 * u2;
}

BigInt discriminant_DZ(const BigInt& S, const BigInt& u, const BigInt& h)
{
    BigInt T = S + h;
    BigInt T3 = T * T * T;
    return BigInt(80) * T3 * T3 + BigInt(20) * T * sym_L(S, u);
}

BigInt quadratic_residue(const BigInt& T, const BigInt& L, const BigInt& Z)
{
    BigInt T2 = T * T;
    BigInt T3 = T2 * T;
    return BigInt(5) * T * Z * Z + BigInt(10) * T3 * Z + (T3 * T2 - L);
}

namespace {

// Steps (3)-(6) for one integral candidate Z.
Verdict judge_z(const BigInt& Z, const BigInt& T, BigInt& v)
{
    if (Z.sign() < 0) {
        return Verdict::FailNonnegZ;
    }
    if (!exact_sqrt(Z, v)) {
        return Verdict::FailSquareZ;
    }
    if (Z.is_odd() != T.is_odd()) {
        return Verdict::FailParity;
    }
    if (Z > T * T) {
        return Verdict::FailSize;
    }
    return Verdict::Solution;
}

} // namespace

SliceCell solve_cell(const BigInt& S, const BigInt& u, const BigInt& h)
{
    if (u.sign() < 0 || u > S) {
        throw std::domain_error("solve_cell: need 0 <= u <= S");
    }
    if (u.is_odd() != S.is_odd()) {
        throw std::domain_error("solve_cell: u and S differ in parity");
    }
    SliceCell cell;
    cell.S = S;
    cell.u = u;
    cell.T = S + h;
    if (cell.T.sign() <= 0) {
        throw std::domain_error("solve_cell: T = S + h must be positive");
    }
    cell.L = sym_L(S, u);
    cell.D = discriminant_DZ(S, u, h);

    BigInt Y;
    if (!exact_sqrt(cell.D, Y)) {
        cell.verdict = Verdict::FailSquareD;
        return cell;
    }
    cell.Y = Y;

    const BigInt& T = cell.T;
    BigInt den = BigInt(10) * T;
    BigInt base = -(BigInt(10) * T * T * T);
    cell.verdict = Verdict::FailIntegralZ;
    for (int sign : {1, -1}) {
        BigInt num = sign > 0 ? base + Y : base - Y;
        if (!num.divisible_by(den)) {
            continue;
        }
        BigInt Z = num / den;
        BigInt v;
        Verdict verdict = judge_z(Z, T, v);
        if (!cell.Z || verdict > cell.verdict) {
            cell.verdict = verdict;
            cell.Z = Z;
            cell.Y = sign > 0 ? Y : -Y;
            cell.v = verdict > Verdict::FailSquareZ ? std::optional<BigInt>(v) : std::nullopt;
        }
        if (Y.is_zero()) {
            break;
        }
    }

    if (cell.verdict == Verdict::Solution) {
        const BigInt two(2);
        Solution s;
        s.a = (S - u) / two;
        s.b = (S + u) / two;
        s.c = (T - *cell.v) / two;
        s.d = (T + *cell.v) / two;
        s.trivial = (s.a == s.c && s.b == s.d);
        cell.solution = s;
    }
    return cell;
}

ScanStats& ScanStats::operator+=(const ScanStats& o)
{
    for (std::size_t i = 0; i < kVerdictCount; ++i) {
        verdicts[i] += o.verdicts[i];
    }
    cells += o.cells;
    t_zero_cells += o.t_zero_cells;
    t_negative_cells += o.t_negative_cells;
    root_check_failures += o.root_check_failures;
    root_checks += o.root_checks;
    return *this;
}

namespace {

constexpr std::uint64_t kM = kSquareSieveModulus;

std::uint64_t mod_m(std::int64_t x)
{
    auto m = static_cast<std::int64_t>(kM);
    std::int64_t r = x % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

struct Chunk {
    std::int64_t lo;
    std::int64_t hi;
};

struct ChunkOutput {
    std::vector<Solution> solutions;
    std::vector<SliceCell> square_cells;
    ScanStats stats;
};

void scan_chunk(const Chunk& chunk, std::int64_t h, bool keep_cells, ChunkOutput& out)
{
    const BigInt hb(h);
    for (std::int64_t S = chunk.lo; S <= chunk.hi; ++S) {
        std::int64_t T = S + h;
        std::int64_t u_count = S / 2 + 1; // u in {S mod 2, S mod 2 + 2, ..., S}
        if (T < 0) {
            out.stats.t_negative_cells += static_cast<std::uint64_t>(u_count);
            continue;
        }
        if (T == 0) {
            // c = d = 0 forces a = b = 0.
            out.stats.t_zero_cells += static_cast<std::uint64_t>(u_count);
            if (S == 0) {
                out.solutions.push_back({BigInt(0), BigInt(0), BigInt(0), BigInt(0), true});
            }
            continue;
        }
        // D_Z modulo the sieve modulus, entirely in 64-bit arithmetic.
        std::uint64_t s = mod_m(S);
        std::uint64_t t = mod_m(T);
        std::uint64_t s2 = s * s % kM;
        std::uint64_t s3 = s2 * s % kM;
        std::uint64_t s5 = s3 * s2 % kM;
        std::uint64_t t3 = t * t % kM * t % kM;
        std::uint64_t head = 80 * (t3 * t3 % kM) % kM;
        std::uint64_t twenty_t = 20 * t % kM;
        std::uint64_t ten_s3 = 10 * s3 % kM;
        std::uint64_t five_s = 5 * s % kM;
        for (std::int64_t u = S & 1; u <= S; u += 2) {
            ++out.stats.cells;
            std::uint64_t um = mod_m(u);
            std::uint64_t u2 = um * um % kM;
            std::uint64_t L = (s5 + ten_s3 * u2 % kM + five_s * (u2 * u2 % kM)) % kM;
            std::uint64_t D = (head + twenty_t * L) % kM;
            if (!passes_square_sieve_residue(D)) {
                ++out.stats.verdicts[static_cast<std::size_t>(Verdict::FailSquareD)];
                continue;
            }
            SliceCell cell = solve_cell(BigInt(S), BigInt(u), hb);
            ++out.stats.verdicts[static_cast<std::size_t>(cell.verdict)];
            if (cell.verdict > Verdict::FailIntegralZ) {
                ++out.stats.root_checks;
                if (!quadratic_residue(cell.T, cell.L, *cell.Z).is_zero()) {
                    ++out.stats.root_check_failures;
                }
            }
            if (cell.solution) {
                out.solutions.push_back(*cell.solution);
            }
            if (keep_cells && cell.verdict != Verdict::FailSquareD) {
                out.square_cells.push_back(std::move(cell));
            }
        }
    }
}

} // namespace

ScanResult scan_slice(const SliceParams& params, const ScanOptions& options)
{
    if (params.s_min < 0 || params.s_min > params.s_max) {
        throw std::domain_error("scan_slice: need 0 <= s_min <= s_max");
    }
    ScanResult result;
    result.params = params;
    if (options.mdo_filter && !mdo_admissible(params.h)) {
        result.rejected_by_mdo = true;
        return result;
    }

    // Work per S grows linearly, so chunks get narrower toward s_max.
    unsigned workers = std::max(1U, options.workers);
    std::vector<Chunk> chunks;
    {
        std::int64_t span = params.s_max - params.s_min + 1;
        std::int64_t target_chunks = std::min<std::int64_t>(span, static_cast<std::int64_t>(workers) * 16);
        double total = 0.0;
        for (std::int64_t S = params.s_min; S <= params.s_max; ++S) {
            total += static_cast<double>(S / 2 + 1);
        }
        double per_chunk = total / static_cast<double>(target_chunks);
        double acc = 0.0;
        std::int64_t lo = params.s_min;
        for (std::int64_t S = params.s_min; S <= params.s_max; ++S) {
            acc += static_cast<double>(S / 2 + 1);
            if (acc >= per_chunk || S == params.s_max) {
                chunks.push_back({lo, S});
                lo = S + 1;
                acc = 0.0;
            }
        }
    }

    std::vector<ChunkOutput> outputs(chunks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < chunks.size(); i = next++) {
            scan_chunk(chunks[i], params.h, options.keep_square_cells, outputs[i]);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    for (auto& o : outputs) {
        result.stats += o.stats;
        for (auto& s : o.solutions) {
            if (!s.trivial) {
                result.nontrivial.push_back(s);
            }
            result.solutions.push_back(std::move(s));
        }
        for (auto& c : o.square_cells) {
            result.square_cells.push_back(std::move(c));
        }
    }
    return result;
}

bool recheck_solution(const Solution& s, const BigInt& h)
{
    for (const BigInt* x : {&s.a, &s.b, &s.c, &s.d}) {
        if (x->sign() < 0) {
            return false;
        }
    }
    if ((s.c + s.d) - (s.a + s.b) != h) {
        return false;
    }
    return pow(s.a, 5) + pow(s.b, 5) == pow(s.c, 5) + pow(s.d, 5);
}

} // namespace quintic
