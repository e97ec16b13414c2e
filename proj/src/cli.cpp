#include "quintic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "quintic/fixtures.hpp"
#include "quintic/genus2.hpp"
#include "quintic/identities.hpp"
#include "quintic/oracle.hpp"
#include "quintic/slice.hpp"
#include "quintic/specialization.hpp"

namespace quintic::cli {

using ojson = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

Fixtures fixtures_for(const GlobalOptions& g)
{
    return load_fixtures(g.fixtures_path.empty() ? default_fixture_path() : g.fixtures_path);
}

ojson envelope(const std::string& command, ojson config, const Fixtures* fx, ojson results, bool pass,
               const GlobalOptions& g, Clock::time_point start)
{
    ojson e;
    e["tool"] = "quintic";
    e["version"] = kVersion;
    e["command"] = command;
    e["config"] = std::move(config);
    if (fx != nullptr) {
        e["fixtures"] = {{"version", fx->version}, {"fnv1a64", fx->fnv1a64}};
    }
    e["status"] = pass ? "pass" : "fail";
    e["results"] = std::move(results);
    if (g.timing) {
        e["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
    return e;
}

ojson solution_json(const Solution& s)
{
    return {{"a", s.a.to_string()}, {"b", s.b.to_string()}, {"c", s.c.to_string()}, {"d", s.d.to_string()},
            {"trivial", s.trivial}};
}

std::vector<std::string> solution_row(const Solution& s)
{
    return {s.a.to_string(), s.b.to_string(), s.c.to_string(), s.d.to_string(), s.trivial ? "1" : "0"};
}

std::string opt_str(const std::optional<BigInt>& v) { return v ? v->to_string() : ""; }

// Weighted projective form (X : Y : Z) with x = X/Z, weights (1, 3, 1).
std::string projective(const RationalPointRecord& p)
{
    if (p.at_infinity) {
        return "(1 : " + p.Y.to_string() + " : 0)";
    }
    BigInt q = p.x.den();
    BigRat Y = p.Y * BigRat(pow(q, 3));
    return "(" + p.x.num().to_string() + " : " + Y.to_string() + " : " + q.to_string() + ")";
}

std::string join(const std::vector<std::int64_t>& v)
{
    std::string out;
    for (auto x : v) {
        out += (out.empty() ? "" : ",") + std::to_string(x);
    }
    return out;
}

} // namespace

std::string to_csv(const std::vector<std::vector<std::string>>& rows)
{
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::string& f = row[i];
            if (i > 0) {
                out += ',';
            }
            if (f.find_first_of(",\"\n") != std::string::npos) {
                out += '"';
                for (char c : f) {
                    out += c == '"' ? std::string("\"\"") : std::string(1, c);
                }
                out += '"';
            } else {
                out += f;
            }
        }
        out += '\n';
    }
    return out;
}

CommandOutput cmd_verify(const GlobalOptions& g)
{
    auto start = Clock::now();
    Fixtures fx = fixtures_for(g);
    auto results = run_identity_suite(fx);
    CommandOutput out;
    ojson list = ojson::array();
    out.csv.push_back({"identity", "pass", "residue"});
    std::ostringstream text;
    std::size_t passed = 0;
    for (const auto& r : results) {
        ojson item{{"identity", r.name}, {"pass", r.pass}};
        if (!r.pass) {
            item["residue"] = r.residue;
            text << "FAIL " << r.name << "\n  residue: " << r.residue << "\n";
        } else {
            ++passed;
            text << "ok   " << r.name << "\n";
        }
        list.push_back(std::move(item));
        out.csv.push_back({r.name, r.pass ? "1" : "0", r.residue});
    }
    bool pass = passed == results.size();
    text << passed << "/" << results.size() << " identities hold\n";
    ojson body{{"passed", passed}, {"total", results.size()}, {"identities", std::move(list)}};
    out.report = envelope("verify", ojson::object(), &fx, std::move(body), pass, g, start);
    out.exit_code = pass ? kSuccess : kFailure;
    out.text = text.str();
    return out;
}

CommandOutput cmd_search(const GlobalOptions& g, const SearchArgs& a)
{
    auto start = Clock::now();
    if (a.smin < 0 || a.smin > a.smax) {
        throw UsageError("search: need 0 <= smin <= smax");
    }
    bool admissible = mdo_admissible(a.h);
    if (!admissible && !a.allow_inadmissible) {
        throw UsageError("search: h = " + std::to_string(a.h) +
                         " is not divisible by 30, so the slice has no solutions; pass --allow-inadmissible to scan anyway");
    }
    ScanOptions opt;
    opt.mdo_filter = !a.allow_inadmissible;
    opt.workers = g.workers;
    opt.keep_square_cells = !g.csv_path.empty();
    ScanResult r = scan_slice({a.h, a.smin, a.smax}, opt);

    CommandOutput out;
    std::ostringstream text;
    if (!admissible) {
        text << "warning: h = " << a.h << " fails the divisibility obstruction 30 | h\n";
    }
    ojson verdicts = ojson::object();
    for (std::size_t i = 0; i < kVerdictCount; ++i) {
        verdicts[std::string(verdict_name(static_cast<Verdict>(i)))] = r.stats.verdicts[i];
    }
    ojson sols = ojson::array();
    for (const auto& s : r.solutions) {
        sols.push_back(solution_json(s));
    }
    ojson nontrivial = ojson::array();
    for (const auto& s : r.nontrivial) {
        nontrivial.push_back(solution_json(s));
    }
    bool pass = r.stats.root_check_failures == 0;
    ojson body{{"mdo_admissible", admissible},
               {"cells", r.stats.cells},
               {"t_zero_cells", r.stats.t_zero_cells},
               {"t_negative_cells", r.stats.t_negative_cells},
               {"verdicts", std::move(verdicts)},
               {"root_checks", r.stats.root_checks},
               {"root_check_failures", r.stats.root_check_failures},
               {"solutions", std::move(sols)},
               {"nontrivial", std::move(nontrivial)}};
    if (a.cross_check) {
        CrossCheck cc = cross_check_slice(a.h, a.smax, g.workers);
        body["cross_check"] = {{"agree", cc.agree}, {"scanner", cc.scanner.size()}, {"oracle", cc.oracle.size()}};
        pass = pass && cc.agree;
        text << "oracle cross-check: " << (cc.agree ? "agree" : "DISAGREE") << " (" << cc.oracle.size()
             << " solutions)\n";
    }
    ojson config{{"h", a.h}, {"smin", a.smin}, {"smax", a.smax}, {"allow_inadmissible", a.allow_inadmissible},
                 {"cross_check", a.cross_check}};
    out.report = envelope("search", std::move(config), nullptr, std::move(body), pass, g, start);
    out.csv.push_back({"S", "u", "T", "D", "Y", "Z", "v", "verdict"});
    for (const auto& c : r.square_cells) {
        out.csv.push_back({c.S.to_string(), c.u.to_string(), c.T.to_string(), c.D.to_string(), opt_str(c.Y),
                           opt_str(c.Z), opt_str(c.v), std::string(verdict_name(c.verdict))});
    }
    text << "slice h = " << a.h << ", S in [" << a.smin << ", " << a.smax << "]: " << r.stats.cells << " cells, "
         << r.solutions.size() << " solutions, " << r.nontrivial.size() << " nontrivial\n";
    for (std::size_t i = 0; i < kVerdictCount; ++i) {
        text << "  " << verdict_name(static_cast<Verdict>(i)) << ": " << r.stats.verdicts[i] << "\n";
    }
    out.text = text.str();
    out.exit_code = pass ? kSuccess : kFailure;
    return out;
}

CommandOutput cmd_screen(const GlobalOptions& g, const ScreenArgs& a)
{
    auto start = Clock::now();
    if (a.lo > a.hi) {
        throw UsageError("screen: need lo <= hi");
    }
    if (a.h == 0) {
        throw UsageError("screen: h = 0 is degenerate");
    }
    Fixtures fx = fixtures_for(g);
    Screener sc(a.h);
    ScreenOptions opt;
    opt.torsion = a.torsion;
    opt.workers = g.workers;
    auto reports = sc.screen_range(a.lo, a.hi, opt);
    auto injective = injective_values(reports);

    CommandOutput out;
    std::ostringstream text;
    bool pass = true;
    ojson rows = ojson::array();
    out.csv.push_back({"S0", "injective", "disc_nonzero", "square_divisors", "torsion_upper_bound",
                       "two_torsion_points"});
    for (const auto& r : reports) {
        ojson divisors = ojson::array();
        std::string squares;
        for (std::size_t i = 0; i < r.values.size(); ++i) {
            const auto& v = r.values[i];
            divisors.push_back({{"poly", v.label},
                                {"expanded", to_string(sc.divisor_set().divisors[i].poly)},
                                {"value", v.value.to_string()},
                                {"is_square", v.is_square}});
            if (v.is_square) {
                squares += (squares.empty() ? "" : ";") + v.label;
            }
        }
        ojson item{{"S0", r.S0}, {"divisors", std::move(divisors)}, {"disc_nonzero", r.disc_nonzero},
                   {"injective", r.injective}};
        std::string ub;
        std::string tp;
        if (r.torsion) {
            item["torsion"] = {{"upper_bound", r.torsion->upper_bound.to_string()},
                               {"two_torsion_points", r.torsion->two_torsion_points},
                               {"primes", r.torsion->primes.size()}};
            ub = r.torsion->upper_bound.to_string();
            tp = std::to_string(r.torsion->two_torsion_points);
        }
        rows.push_back(std::move(item));
        out.csv.push_back({std::to_string(r.S0), r.injective ? "1" : "0", r.disc_nonzero ? "1" : "0", squares, ub,
                           tp});
    }

    const DivisorSet& ds = sc.divisor_set();
    ojson divisor_json = ojson::array();
    for (const auto& d : ds.divisors) {
        divisor_json.push_back({{"label", d.label}, {"poly", to_string(d.poly)}});
    }
    ojson body{{"divisor_count", ds.divisors.size()},
               {"divisors", std::move(divisor_json)},
               {"injective", injective},
               {"injective_count", injective.size()}};
    text << "h = " << a.h << ": " << ds.divisors.size() << " squarefree divisors; " << injective.size()
         << " injective values in [" << a.lo << ", " << a.hi << "]\n  " << join(injective) << "\n";

    if (a.h == fx.h && a.lo <= fx.injective_lo && a.hi >= fx.injective_hi) {
        std::vector<std::int64_t> in_range;
        std::copy_if(injective.begin(), injective.end(), std::back_inserter(in_range),
                     [&](std::int64_t s) { return s >= fx.injective_lo && s <= fx.injective_hi; });
        bool equal = in_range == fx.injective_list;
        bool subset = std::includes(in_range.begin(), in_range.end(), fx.injective_list.begin(),
                                    fx.injective_list.end());
        bool prefix = in_range.size() >= fx.injective_list.size() &&
                      std::equal(fx.injective_list.begin(), fx.injective_list.end(), in_range.begin());
        body["fixture_comparison"] = {{"fixture_list", fx.injective_list},
                                      {"computed_in_range", in_range.size()},
                                      {"equal", equal},
                                      {"fixture_is_subset", subset},
                                      {"fixture_is_prefix", prefix}};
        pass = pass && equal && ds.divisors.size() == fx.divisor_count;
        text << "fixture list (" << fx.injective_list.size() << " values): "
             << (equal ? "reproduced exactly" : "NOT reproduced exactly") << "; subset: " << (subset ? "yes" : "no")
             << ", prefix: " << (prefix ? "yes" : "no") << "\n";
    }
    if (a.torsion && a.h == fx.h) {
        ojson table = ojson::array();
        for (const auto& row : fx.ranks) {
            if (row.S0 < a.lo || row.S0 > a.hi) {
                continue;
            }
            const auto& r = reports[static_cast<std::size_t>(row.S0 - a.lo)];
            bool match = r.torsion && r.torsion->upper_bound == BigInt(2) && r.torsion->two_torsion_points == 1 &&
                         row.torsion == "Z/2Z";
            pass = pass && match;
            table.push_back({{"S0", row.S0},
                             {"torsion_fixture", row.torsion},
                             {"torsion_certified", match},
                             {"rank", row.rank},
                             {"rank_provenance", fx.ranks_provenance}});
        }
        body["ranks_table"] = std::move(table);
    }
    body["reports"] = std::move(rows);
    ojson config{{"h", a.h}, {"lo", a.lo}, {"hi", a.hi}, {"torsion", a.torsion}};
    out.report = envelope("screen", std::move(config), &fx, std::move(body), pass, g, start);
    out.text = text.str();
    out.exit_code = pass ? kSuccess : kFailure;
    return out;
}

CommandOutput cmd_genus2(const GlobalOptions& g, const Genus2Args& a)
{
    auto start = Clock::now();
    if (a.height < 1) {
        throw UsageError("genus2-scan: height must be positive");
    }
    Fixtures fx = fixtures_for(g);
    SexticModel curve = universal_curve();
    PointScanResult r = bounded_height_scan(curve, a.height, g.workers);

    CommandOutput out;
    std::vector<std::string> found;
    ojson points = ojson::array();
    out.csv.push_back({"projective", "x", "Y", "height", "at_infinity"});
    for (const auto& p : r.points) {
        std::string pr = projective(p);
        found.push_back(pr);
        points.push_back({{"projective", pr},
                          {"at_infinity", p.at_infinity},
                          {"x", p.at_infinity ? "" : p.x.to_string()},
                          {"Y", p.Y.to_string()},
                          {"height", p.height.to_string()}});
        out.csv.push_back({pr, p.at_infinity ? "" : p.x.to_string(), p.Y.to_string(), p.height.to_string(),
                           p.at_infinity ? "1" : "0"});
    }
    std::vector<std::string> expect = fx.genus2_points;
    std::sort(found.begin(), found.end());
    std::sort(expect.begin(), expect.end());
    bool pass = found == expect;
    ojson body{{"curve", to_string(curve.poly(), "x")},
               {"height", a.height},
               {"candidates", r.candidates},
               {"sieve_survivors", r.sieve_survivors},
               {"points", std::move(points)},
               {"matches_fixture", pass},
               {"chabauty",
                {{"provenance", fx.chabauty_provenance},
                 {"rank_bound", fx.chabauty_rank_bound},
                 {"transcript", fx.chabauty_transcript}}}};
    out.report = envelope("genus2-scan", {{"height", a.height}}, &fx, std::move(body), pass, g, start);
    std::ostringstream text;
    text << "Y^2 = " << to_string(curve.poly(), "x") << ", height <= " << a.height << ": " << r.points.size()
         << " points\n";
    for (const auto& p : found) {
        text << "  " << p << "\n";
    }
    text << (pass ? "matches" : "DOES NOT match") << " the recorded point list\n";
    out.text = text.str();
    out.exit_code = pass ? kSuccess : kFailure;
    return out;
}

CommandOutput cmd_pscreen(const GlobalOptions& g, const PScreenArgs& a)
{
    auto start = Clock::now();
    if (a.smax < 1 || a.step < 1 || a.hmax < a.step || a.delta2_max < 1 || a.delta2_h == 0) {
        throw UsageError("p-screen: need smax >= 1, hmax >= step >= 1, delta2-max >= 1, delta2-h != 0");
    }
    GridScreen grid = p_square_grid(a.smax, a.hmax, a.step, g.workers);
    auto d2 = delta2_square_values(a.delta2_h, 1, a.delta2_max, g.workers);

    CommandOutput out;
    ojson squares = ojson::array();
    out.csv.push_back({"kind", "S", "h"});
    for (const auto& [S, h] : grid.squares) {
        squares.push_back({{"S", S}, {"h", h}});
        out.csv.push_back({"P", std::to_string(S), std::to_string(h)});
    }
    for (auto S : d2) {
        out.csv.push_back({"Delta2", std::to_string(S), std::to_string(a.delta2_h)});
    }
    bool pass = grid.squares.empty() && grid.homogeneity_failures == 0 && d2.empty();
    ojson body{{"p_grid",
                {{"tested", grid.tested},
                 {"homogeneity_failures", grid.homogeneity_failures},
                 {"squares", std::move(squares)}}},
               {"delta2", {{"h", a.delta2_h}, {"range", {1, a.delta2_max}}, {"squares", d2}}}};
    ojson config{{"smax", a.smax}, {"hmax", a.hmax}, {"step", a.step}, {"delta2_h", a.delta2_h},
                 {"delta2_max", a.delta2_max}};
    out.report = envelope("p-screen", std::move(config), nullptr, std::move(body), pass, g, start);
    std::ostringstream text;
    text << "P(S,h): " << grid.tested << " grid points, " << grid.squares.size() << " squares, "
         << grid.homogeneity_failures << " homogeneity failures\n";
    text << "Delta2(S0, " << a.delta2_h << ") for 1 <= S0 <= " << a.delta2_max << ": " << d2.size() << " squares\n";
    out.text = text.str();
    out.exit_code = pass ? kSuccess : kFailure;
    return out;
}

CommandOutput cmd_oracle(const GlobalOptions& g, const OracleArgs& a)
{
    auto start = Clock::now();
    if (a.k != 3 && a.k != 5) {
        throw UsageError("oracle: k must be 3 or 5");
    }
    if (a.bound < 1) {
        throw UsageError("oracle: bound must be positive");
    }
    CommandOutput out;
    std::ostringstream text;
    bool pass = true;
    ojson body;
    std::vector<Solution> sols;
    if (a.slice) {
        if (a.k == 5) {
            CrossCheck cc = cross_check_slice(a.h, a.bound, g.workers);
            pass = cc.agree;
            sols = cc.oracle;
            body["cross_check"] = {{"agree", cc.agree}, {"scanner", cc.scanner.size()}, {"oracle", cc.oracle.size()}};
        } else {
            OracleOptions opt;
            opt.workers = g.workers;
            auto oracle = brute_force_slice(3, a.h, a.bound, opt);
            auto scanned = scan_slice_cubic(a.h, a.bound);
            std::sort(scanned.begin(), scanned.end());
            pass = scanned == oracle;
            sols = oracle;
            body["cross_check"] = {{"agree", pass}, {"scanner", scanned.size()}, {"oracle", oracle.size()}};
        }
        text << "k = " << a.k << ", slice h = " << a.h << ", S <= " << a.bound << ": " << sols.size()
             << " solutions, pipeline " << (pass ? "agrees" : "DISAGREES") << " with brute force\n";
    } else {
        OracleOptions opt;
        opt.workers = g.workers;
        sols = brute_force(a.k, a.bound, opt);
        text << "k = " << a.k << ", 0 <= a <= b <= " << a.bound << ": " << sols.size()
             << " nontrivial collisions\n";
    }
    ojson list = ojson::array();
    out.csv.push_back({"a", "b", "c", "d", "trivial"});
    for (const auto& s : sols) {
        list.push_back(solution_json(s));
        out.csv.push_back(solution_row(s));
        if (!s.trivial && list.size() <= 20) {
            text << "  " << s.a.to_string() << "^" << a.k << " + " << s.b.to_string() << "^" << a.k << " = "
                 << s.c.to_string() << "^" << a.k << " + " << s.d.to_string() << "^" << a.k << "\n";
        }
    }
    body["solutions"] = std::move(list);
    ojson config{{"k", a.k}, {"bound", a.bound}, {"slice", a.slice}};
    if (a.slice) {
        config["h"] = a.h;
    }
    out.report = envelope("oracle", std::move(config), nullptr, std::move(body), pass, g, start);
    out.text = text.str();
    out.exit_code = pass ? kSuccess : kFailure;
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact search and verification tools for a^5 + b^5 = c^5 + d^5 on linear slices", "quintic"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    GlobalOptions g;
    g.workers = std::max(1U, std::thread::hardware_concurrency());
    app.add_option("--json", g.json_path, "Write the JSON report to PATH");
    app.add_option("--csv", g.csv_path, "Write CSV rows to PATH");
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::Range(1U, 1024U));
    app.add_flag("--quiet", g.quiet, "No text summary on stdout");
    app.add_flag("--timing", g.timing, "Include wall time in the JSON report");
    app.add_option("--fixtures", g.fixtures_path, "Golden value file")->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "Run the exact identity suite");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Scan one slice (c+d) - (a+b) = h");
    search->add_option("--h", sa.h, "Slice offset")->required();
    search->add_option("--smin", sa.smin, "Smallest S = a + b");
    search->add_option("--smax", sa.smax, "Largest S = a + b");
    search->add_flag("--allow-inadmissible", sa.allow_inadmissible, "Scan even when 30 does not divide h");
    search->add_flag("--cross-check", sa.cross_check, "Compare against the brute-force oracle");

    ScreenArgs sc;
    auto* screen = app.add_subcommand("screen", "Injectivity screening of specializations");
    screen->add_option("--h", sc.h, "Slice offset");
    screen->add_option("--lo", sc.lo, "First S0");
    screen->add_option("--hi", sc.hi, "Last S0");
    screen->add_flag("--torsion", sc.torsion, "Certify the torsion of each specialization");

    Genus2Args ga;
    auto* genus2 = app.add_subcommand("genus2-scan", "Rational points of bounded height on the universal curve");
    genus2->add_option("--height", ga.height, "Height bound H");

    PScreenArgs pa;
    auto* pscreen = app.add_subcommand("p-screen", "Square-class screens for P(S,h) and Delta2");
    pscreen->add_option("--smax", pa.smax, "S ranges over [-smax, smax] minus 0");
    pscreen->add_option("--hmax", pa.hmax, "h ranges over nonzero multiples of step with |h| <= hmax");
    pscreen->add_option("--step", pa.step, "h step");
    pscreen->add_option("--delta2-h", pa.delta2_h, "Slice for the Delta2 screen");
    pscreen->add_option("--delta2-max", pa.delta2_max, "Delta2 screen covers 1 <= S0 <= this");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Brute-force equal sums of like powers");
    oracle->add_option("--k", oa.k, "Exponent, 3 or 5")->check(CLI::IsMember({3, 5}));
    oracle->add_option("--bound", oa.bound, "Bound N on a, b (or on S with --slice-h)");
    auto* slice_opt = oracle->add_option("--slice-h", oa.h, "Restrict to one slice and cross-check the pipeline");

    for (auto* sub : {verify, search, screen, genus2, pscreen, oracle}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }
    oa.slice = slice_opt->count() > 0;

    CommandOutput result;
    try {
        if (*verify) {
            result = cmd_verify(g);
        } else if (*search) {
            result = cmd_search(g, sa);
        } else if (*screen) {
            result = cmd_screen(g, sc);
        } else if (*genus2) {
            result = cmd_genus2(g, ga);
        } else if (*pscreen) {
            result = cmd_pscreen(g, pa);
        } else {
            result = cmd_oracle(g, oa);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }

    if (!g.json_path.empty()) {
        std::ofstream f(g.json_path, std::ios::binary);
        if (!(f << result.report.dump(2) << "\n")) {
            err << "error: cannot write " << g.json_path << "\n";
            return kUsage;
        }
    }
    if (!g.csv_path.empty()) {
        std::ofstream f(g.csv_path, std::ios::binary);
        if (!(f << to_csv(result.csv))) {
            err << "error: cannot write " << g.csv_path << "\n";
            return kUsage;
        }
    }
    if (!g.quiet) {
        out << result.text;
    }
    return result.exit_code;
}

} // namespace quintic::cli
