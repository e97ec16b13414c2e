#include "quintic/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

#include "quintic/exactmath.hpp"

namespace quintic {

namespace {

using Pair = CollisionTable::Pair;

void check_exponent(int k)
{
    if (k != 3 && k != 5) {
        throw std::domain_error("oracle: exponent must be 3 or 5, got " + std::to_string(k));
    }
}

std::vector<BigInt> power_table(int k, std::int64_t n)
{
    std::vector<BigInt> t;
    t.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t x = 0; x <= n; ++x) {
        t.push_back(pow(BigInt(x), static_cast<unsigned long>(k)));
    }
    return t;
}

struct SumEntry {
    BigInt value;
    Pair pair;
};

// Pairs a <= b with b <= max_b and a + b <= max_sum, ordered by a then b.
std::vector<SumEntry> generate_pairs(const std::vector<BigInt>& pw, std::int64_t max_b,
                                     std::int64_t max_sum, unsigned workers)
{
    workers = std::max(1U, workers);
    std::vector<std::vector<SumEntry>> parts(workers);
    auto fill = [&](unsigned w) {
        for (std::int64_t a = w; a <= max_b; a += workers) {
            for (std::int64_t b = a; b <= max_b && a + b <= max_sum; ++b) {
                parts[w].push_back({pw[static_cast<std::size_t>(a)] + pw[static_cast<std::size_t>(b)], {a, b}});
            }
        }
    };
    if (workers == 1) {
        fill(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(fill, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    std::vector<SumEntry> all;
    for (auto& p : parts) {
        std::move(p.begin(), p.end(), std::back_inserter(all));
    }
    return all;
}

// Calls fn once per distinct sum value with its pairs sorted ascending.
void for_each_group(std::vector<SumEntry> entries, bool use_map,
                    const std::function<void(const std::vector<Pair>&)>& fn)
{
    if (use_map) {
        std::map<BigInt, std::vector<Pair>> groups;
        for (auto& e : entries) {
            groups[e.value].push_back(e.pair);
        }
        for (auto& [value, pairs] : groups) {
            std::sort(pairs.begin(), pairs.end());
            fn(pairs);
        }
        return;
    }
    std::sort(entries.begin(), entries.end(), [](const SumEntry& x, const SumEntry& y) {
        if (x.value != y.value) {
            return x.value < y.value;
        }
        return x.pair < y.pair;
    });
    std::vector<Pair> run;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        run.push_back(entries[i].pair);
        if (i + 1 == entries.size() || entries[i + 1].value != entries[i].value) {
            fn(run);
            run.clear();
        }
    }
}

Solution make_solution(const Pair& p, const Pair& q)
{
    Solution s{BigInt(p.first), BigInt(p.second), BigInt(q.first), BigInt(q.second), p == q};
    return s;
}

} // namespace

CollisionTable::CollisionTable(int k, std::int64_t bound) : k_(k)
{
    check_exponent(k);
    if (bound < 0) {
        throw std::domain_error("CollisionTable: negative bound");
    }
    auto pw = power_table(k, bound);
    for (std::int64_t a = 0; a <= bound; ++a) {
        for (std::int64_t b = a; b <= bound; ++b) {
            groups_[pw[static_cast<std::size_t>(a)] + pw[static_cast<std::size_t>(b)]].emplace_back(a, b);
        }
    }
}

std::vector<BigInt> CollisionTable::colliding_keys() const
{
    std::vector<BigInt> keys;
    for (const auto& [value, pairs] : groups_) {
        if (pairs.size() > 1) {
            keys.push_back(value);
        }
    }
    return keys;
}

std::vector<Solution> brute_force(int k, std::int64_t bound, const OracleOptions& options)
{
    check_exponent(k);
    if (bound < 1) {
        throw std::domain_error("brute_force: bound must be >= 1");
    }
    auto pw = power_table(k, bound);
    std::vector<Solution> out;
    for_each_group(generate_pairs(pw, bound, 2 * bound, options.workers), bound <= options.map_threshold,
                   [&](const std::vector<Pair>& pairs) {
                       for (std::size_t i = 0; i < pairs.size(); ++i) {
                           for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                               out.push_back(make_solution(pairs[i], pairs[j]));
                           }
                       }
                   });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Solution> brute_force_slice(int k, std::int64_t h, std::int64_t s_max, const OracleOptions& options)
{
    check_exponent(k);
    if (s_max < 0) {
        return {};
    }
    std::int64_t max_sum = s_max + std::max<std::int64_t>(h, 0);
    auto pw = power_table(k, max_sum);
    std::vector<Solution> out;
    for_each_group(generate_pairs(pw, max_sum, max_sum, options.workers), max_sum <= options.map_threshold,
                   [&](const std::vector<Pair>& pairs) {
                       for (const auto& p : pairs) {
                           std::int64_t S = p.first + p.second;
                           if (S > s_max) {
                               continue;
                           }
                           for (const auto& q : pairs) {
                               if (q.first + q.second - S == h) {
                                   out.push_back(make_solution(p, q));
                               }
                           }
                       }
                   });
    std::sort(out.begin(), out.end());
    return out;
}

CrossCheck cross_check_slice(std::int64_t h, std::int64_t s_max, unsigned workers)
{
    CrossCheck cc;
    ScanOptions opts;
    opts.mdo_filter = false;
    opts.workers = workers;
    cc.scanner = scan_slice({h, 0, s_max}, opts).solutions;
    std::sort(cc.scanner.begin(), cc.scanner.end());
    OracleOptions oo;
    oo.workers = workers;
    cc.oracle = brute_force_slice(5, h, s_max, oo);
    cc.agree = cc.scanner == cc.oracle;
    return cc;
}

BigInt sym_L3(const BigInt& S, const BigInt& u)
{
    return S * S * S + BigInt(3) * S * u * u;
}

std::vector<Solution> scan_slice_cubic(std::int64_t h, std::int64_t s_max)
{
    std::vector<Solution> out;
    const BigInt two(2);
    for (std::int64_t s = 0; s <= s_max; ++s) {
        std::int64_t t = s + h;
        if (t < 0) {
            continue;
        }
        if (t == 0) {
            if (s == 0) {
                out.push_back({BigInt(0), BigInt(0), BigInt(0), BigInt(0), true});
            }
            continue;
        }
        BigInt S(s);
        BigInt T(t);
        BigInt T3 = T * T * T;
        BigInt den = BigInt(3) * T;
        for (std::int64_t u = s & 1; u <= s; u += 2) {
            BigInt num = sym_L3(S, BigInt(u)) - T3;
            if (!num.divisible_by(den)) {
                continue;
            }
            BigInt Z = num / den;
            BigInt v;
            if (Z.sign() < 0 || !exact_sqrt(Z, v) || Z.is_odd() != T.is_odd() || Z > T * T) {
                continue;
            }
            Solution sol{(S - BigInt(u)) / two, (S + BigInt(u)) / two, (T - v) / two, (T + v) / two, false};
            sol.trivial = sol.a == sol.c && sol.b == sol.d;
            out.push_back(sol);
        }
    }
    return out;
}

} // namespace quintic
