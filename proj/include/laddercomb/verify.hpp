#pragma once

// Identity verification suites: each one sweeps a formula against an
// independent computation (dynamic-programming path counts or brute-force
// family enumeration) and reports the cases run and any mismatches. The CLI
// serializes reports as JSON; the acceptance harness consumes them directly.

#include "laddercomb/closed_form.hpp"
#include "laddercomb/exact.hpp"
#include "laddercomb/lgv.hpp"
#include "laddercomb/multiplicity.hpp"
#include "laddercomb/paths.hpp"
#include "laddercomb/region.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace laddercomb::verify {

struct Failure {
    std::string input;
    std::string expected;
    std::string got;
};

struct Report {
    std::string suite;
    long cases = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0.0;
    std::map<std::string, long> stats;  // auxiliary counters, not serialized

    bool passed() const { return failures.empty(); }
};

// Called once per case with a comma-separated parameter prefix and the
// computed value; used by the CLI's --csv emitter.
using CsvSink = std::function<void(const std::string& params, const std::string& value)>;

struct Options {
    int closed_form_max = 12;
    int power2_max_m = 30;
    int fibonacci_max_m = 30;
    int hockey_stick_tuples = 500;
    int lgv_max_mn = 6;
    int lgv_max_r = 3;
    std::size_t lgv_config_cap = 5000;    // hard cap per region
    std::size_t lgv_region_budget = 150;  // stride-sample configs above this
    int multiplicity_max_mn = 6;
    int multiplicity_max_r = 3;
    int collapse_max_mn = 8;
    int pfaffian_max_n = 8;
    int pfaffian_collapse_max_n = 12;
    std::int64_t brute_cap = 50'000'000;
};

inline const char* csv_header(const std::string& suite) {
    if (suite == "closed-form") return "kind,m,n,k,l,value";
    if (suite == "lgv") return "region,r,a,c,d,value";
    if (suite == "fibonacci") return "kind,m,value";
    if (suite == "power2") return "m,value";
    if (suite == "hockey-stick") return "n,k,a,b,value";
    if (suite == "multiplicity") return "kind,m,n,k,l,r,value";
    if (suite == "pfaffian") return "kind,n,l,r,value";
    return "";
}

namespace detail {

class Recorder {
public:
    Recorder(Report& report, const CsvSink& sink) : report_(report), sink_(sink) {}

    void record(const std::string& input, const ApInt& expected, const ApInt& got,
                const std::string& csv_params) {
        ++report_.cases;
        if (expected != got) {
            report_.failures.push_back({input, expected.str(), got.str()});
        }
        if (sink_) sink_(csv_params, got.str());
    }

private:
    Report& report_;
    const CsvSink& sink_;
};

class Stopwatch {
public:
    explicit Stopwatch(Report& report) : report_(report), start_(clock::now()) {}
    ~Stopwatch() {
        report_.elapsed_ms =
            std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    Report& report_;
    clock::time_point start_;
};

inline std::string join(const std::vector<Point>& pts, bool rows) {
    std::string out;
    for (const Point p : pts) {
        if (!out.empty()) out += ';';
        out += std::to_string(rows ? p.row : p.col);
    }
    return out;
}

// Named ladder regions swept by the family-count suites: every diagonal
// two-sided ladder within the bound, plus a few staircase regions whose
// boundaries are not diagonal.
struct NamedRegion {
    std::string name;  // no commas, usable as a CSV field
    LadderRegion region;
};

inline std::vector<NamedRegion> sweep_regions(int max_mn) {
    std::vector<NamedRegion> regions;
    for (int m = 2; m <= max_mn; ++m) {
        for (int n = 2; n <= max_mn; ++n) {
            const int cut_max = std::min(m - 2, n - 2);
            for (int k = 0; k <= cut_max; ++k) {
                for (int l = 0; l <= cut_max; ++l) {
                    std::ostringstream name;
                    name << "diag:" << m << 'x' << n << ":k" << k << ":l" << l;
                    regions.push_back({name.str(), diagonal_two_sided(m, n, k, l)});
                }
            }
        }
    }
    if (max_mn >= 5) {
        const BoundaryPath upper({{3, 5}, {3, 4}, {4, 4}, {5, 4}, {5, 3}});
        const BoundaryPath lower({{1, 2}, {2, 2}, {2, 1}, {3, 1}});
        regions.push_back({"stairs:5x5:a", from_boundaries(5, 5, upper, lower)});
    }
    if (max_mn >= 6) {
        const BoundaryPath upper({{4, 6}, {4, 5}, {5, 5}, {5, 4}, {6, 4}});
        const BoundaryPath lower({{1, 3}, {1, 2}, {2, 2}, {3, 2}, {3, 1}, {4, 1}});
        regions.push_back({"stairs:6x6:a", from_boundaries(6, 6, upper, lower)});

        const BoundaryPath upper2({{4, 5}, {5, 5}, {5, 4}, {6, 4}, {6, 3}});
        const BoundaryPath lower2({{1, 2}, {2, 2}, {3, 2}, {3, 1}});
        regions.push_back({"stairs:6x5:a", from_boundaries(6, 5, upper2, lower2)});
    }
    return regions;
}

}  // namespace detail

// Closed-form corner-to-corner counts against the path-count DP, and the
// one-sided formula against the two-sided one at l = 0.
inline Report run_closed_form(const Options& opt, const CsvSink& sink = {}) {
    Report report;
    report.suite = "closed-form";
    detail::Stopwatch timer(report);
    detail::Recorder rec(report, sink);

    for (int m = 2; m <= opt.closed_form_max; ++m) {
        for (int n = 2; n <= opt.closed_form_max; ++n) {
            const int cut_max = std::min(m - 2, n - 2);
            for (int k = 0; k <= cut_max; ++k) {
                for (int l = 0; l <= cut_max; ++l) {
                    const LadderRegion region = diagonal_two_sided(m, n, k, l);
                    const ApInt expected = count_paths(region, {1, n}, {m, 1});
                    const ApInt got = two_sided_count(m, n, k, l);
                    std::ostringstream input, csv;
                    input << "two-sided m=" << m << " n=" << n << " k=" << k << " l=" << l;
                    csv << "two-sided," << m << ',' << n << ',' << k << ',' << l;
                    rec.record(input.str(), expected, got, csv.str());
                }
                const ApInt expected = two_sided_count(m, n, k, 0);
                const ApInt got = one_sided_count(m, n, k);
                std::ostringstream input, csv;
                input << "one-sided m=" << m << " n=" << n << " k=" << k;
                csv << "one-sided," << m << ',' << n << ',' << k << ",0";
                rec.record(input.str(), expected, got, csv.str());
                ++report.stats["one_sided_cases"];
            }
        }
    }
    return report;
}

// Determinant family counts against brute-force enumeration over an
// exhaustively generated (stride-sampled above the per-region budget) set of
// valid endpoint configs.
inline Report run_lgv(const Options& opt, const CsvSink& sink = {}) {
    Report report;
    report.suite = "lgv";
    detail::Stopwatch timer(report);
    detail::Recorder rec(report, sink);

    for (const auto& [name, region] : detail::sweep_regions(opt.lgv_max_mn)) {
        const std::vector<EndpointConfig> all_configs =
            enumerate_endpoint_configs(region, opt.lgv_max_r, opt.lgv_config_cap);
        std::size_t stride = 1;
        if (all_configs.size() > opt.lgv_region_budget && opt.lgv_region_budget > 0) {
            stride = (all_configs.size() + opt.lgv_region_budget - 1) / opt.lgv_region_budget;
        }
        for (std::size_t idx = 0; idx < all_configs.size(); idx += stride) {
            const EndpointConfig& cfg = all_configs[idx];
            const ApMatrix matrix = path_matrix(region, cfg);
            bool unreachable_pair = false;
            for (int t = 1; t <= cfg.size(); ++t) {
                if (matrix.at(t, t) == 0) unreachable_pair = true;
            }
            const ApInt determinant = det(matrix);
            const ApInt brute = count_disjoint_families_bruteforce(
                region, cfg.sources, cfg.sinks, opt.brute_cap);

            std::ostringstream input, csv;
            input << name << " a=" << detail::join(cfg.sources, true)
                  << " c=" << detail::join(cfg.sinks, true)
                  << " d=" << detail::join(cfg.sinks, false);
            csv << name << ',' << cfg.size() << ',' << detail::join(cfg.sources, true) << ','
                << detail::join(cfg.sinks, true) << ',' << detail::join(cfg.sinks, false);
            rec.record(input.str(), brute, determinant, csv.str());

            if (unreachable_pair) {
                ++report.stats["degenerate_zero"];
                if (determinant != 0 || brute != 0) {
                    report.failures.push_back({"degenerate-zero " + input.str(), "0",
                                               determinant.str() + "/" + brute.str()});
                }
            }
        }
    }
    report.stats["configs"] = report.cases;
    return report;
}

inline Report run_power2(const Options& opt, const CsvSink& sink = {}) {
    Report report;
    report.suite = "power2";
    detail::Stopwatch timer(report);
    detail::Recorder rec(report, sink);

    for (int m = 1; m <= opt.power2_max_m; ++m) {
        const ApInt expected = ApInt(1) << m;
        rec.record("m=" + std::to_string(m), expected, power_of_two_lhs(m), std::to_string(m));
    }
    return report;
}

inline Report run_fibonacci(const Options& opt, const CsvSink& sink = {}) {
    Report report;
    report.suite = "fibonacci";
    detail::Stopwatch timer(report);
    detail::Recorder rec(report, sink);

    for (int m = 1; m <= opt.fibonacci_max_m; ++m) {
        rec.record("odd m=" + std::to_string(m), fibonacci_reference(2 * m + 1),
                   fibonacci_lhs_odd(m), "odd," + std::to_string(m));
        rec.record("even m=" + std::to_string(m), fibonacci_reference(2 * m),
                   fibonacci_lhs_even(m), "even," + std::to_string(m));
    }
    return report;
}

// Telescoping partial-row sums of binomials on random tuples.
inline Report run_hockey_stick(const Options& opt, const CsvSink& sink = {}) {
    Report report;
    report.suite = "hockey-stick";
    detail::Stopwatch timer(report);
    detail::Recorder rec(report, sink);

    std::mt19937_64 rng(0x1dde7);
    std::uniform_int_distribution<int> pick_n(1, 40);
    for (int t = 0; t < opt.hockey_stick_tuples; ++t) {
        const int n = pick_n(rng);
        const int a = std::uniform_int_distribution<int>(1, n)(rng);
        const int b = std::uniform_int_distribution<int>(a, n)(rng);
        const int k = std::uniform_int_distribution<int>(0, n)(rng);

        ApInt lhs = 0;
        for (int l = a; l <= b; ++l) lhs += binomial(n - l, k);
        const ApInt rhs = binomial(n - a + 1, k + 1) - binomial(n - b, k + 1);

        std::ostringstream input, csv;
        input << "n=" << n << " k=" << k << " a=" << a << " b=" << b;
        csv << n << ',' << k << ',' << a << ',' << b;
        rec.record(input.str(), rhs, lhs, csv.str());
    }
    return report;
}

// Ladder multiplicity determinants against brute-force family counts, the
// collapse to the maximal-minor determinant at k = l = 0, the one-sided
// collapse, and agreement of the two entry evaluations.
inline Report run_multiplicity(const Options& opt, const CsvSink& sink = {}) {
    Report report;
    report.suite = "multiplicity";
    detail::Stopwatch timer(report);
    detail::Recorder rec(report, sink);

    for (int m = 2; m <= opt.multiplicity_max_mn; ++m) {
        for (int n = 2; n <= opt.multiplicity_max_mn; ++n) {
            const int cut_max = std::min(m - 2, n - 2);
            for (int k = 0; k <= cut_max; ++k) {
                for (int l = 0; l <= cut_max; ++l) {
                    const LadderRegion region = diagonal_two_sided(m, n, k, l);
                    const int r_max = std::min(std::min(m - k, n - l) - 1, opt.multiplicity_max_r);
                    for (int r = 1; r <= r_max; ++r) {
                        const LadderMinorParams params{m, n, k, l, r};
                        std::vector<Point> sources, sinks;
                        for (int i = 1; i <= r; ++i) {
                            sources.push_back({i, n});
                            sinks.push_back({m, i});
                        }
                        const ApInt brute = count_disjoint_families_bruteforce(
                            region, sources, sinks, opt.brute_cap);
                        const ApInt formula = multiplicity_ladder(params);
                        std::ostringstream input, csv;
                        input << "ladder m=" << m << " n=" << n << " k=" << k << " l=" << l
                              << " r=" << r;
                        csv << "ladder," << m << ',' << n << ',' << k << ',' << l << ',' << r;
                        rec.record(input.str(), brute, formula, csv.str());

                        for (int i = 1; i <= r; ++i) {
                            for (int j = 1; j <= r; ++j) {
                                std::ostringstream einput, ecsv;
                                einput << "entry i=" << i << " j=" << j << " of " << input.str();
                                ecsv << "entry:i" << i << ":j" << j << ',' << m << ',' << n << ','
                                     << k << ',' << l << ',' << r;
                                rec.record(einput.str(), ladder_entry_direct(params, i, j),
                                           ladder_entry_substituted(params, i, j), ecsv.str());
                                ++report.stats["entry_cases"];
                            }
                        }
                    }
                }
            }
        }
    }

    for (int m = 2; m <= opt.collapse_max_mn; ++m) {
        for (int n = 2; n <= opt.collapse_max_mn; ++n) {
            for (int r = 1; r <= std::min(m, n) - 1; ++r) {
                std::ostringstream input, csv;
                input << "giambelli m=" << m << " n=" << n << " r=" << r;
                csv << "giambelli," << m << ',' << n << ",0,0," << r;
                rec.record(input.str(), multiplicity_maximal(m, n, r),
                           multiplicity_ladder(m, n, 0, 0, r), csv.str());
                ++report.stats["giambelli_cases"];
            }
            const int cut_max = std::min(m - 2, n - 2);
            for (int k = 0; k <= cut_max; ++k) {
                for (int r = 1; r < std::min(m - k, n); ++r) {
                    std::ostringstream input, csv;
                    input << "one-sided m=" << m << " n=" << n << " k=" << k << " r=" << r;
                    csv << "one-sided," << m << ',' << n << ',' << k << ",0," << r;
                    rec.record(input.str(), multiplicity_one_sided_ladder(m, n, k, r),
                               multiplicity_ladder(m, n, k, 0, r), csv.str());
                    ++report.stats["one_sided_cases"];
                }
            }
        }
    }

    // frozen fixtures, each first confirmed against the brute-force oracle
    {
        const LadderRegion rect44 = LadderRegion::rectangle(4, 4);
        const std::vector<Point> sources{{1, 4}, {2, 4}};
        const std::vector<Point> sinks{{4, 1}, {4, 2}};
        rec.record("fixture maximal m=4 n=4 r=2 (oracle)", 20,
                   count_disjoint_families_bruteforce(rect44, sources, sinks, opt.brute_cap),
                   "fixture:maximal-oracle,4,4,0,0,2");
        rec.record("fixture maximal m=4 n=4 r=2", 20, multiplicity_maximal(4, 4, 2),
                   "fixture:maximal,4,4,0,0,2");
        const LadderRegion rect22 = LadderRegion::rectangle(2, 2);
        rec.record("fixture maximal m=2 n=2 r=1 (oracle)", 2,
                   count_disjoint_families_bruteforce(rect22, {{1, 2}}, {{2, 1}}, opt.brute_cap),
                   "fixture:maximal-oracle,2,2,0,0,1");
        rec.record("fixture maximal m=2 n=2 r=1", 2, multiplicity_maximal(2, 2, 1),
                   "fixture:maximal,2,2,0,0,1");
        rec.record("fixture ladder m=4 n=4 k=2 l=2 r=1", 8, multiplicity_ladder(4, 4, 2, 2, 1),
                   "fixture:ladder,4,4,2,2,1");
        rec.record("fixture ladder m=4 n=4 k=2 l=0 r=1", 14, multiplicity_ladder(4, 4, 2, 0, 1),
                   "fixture:ladder,4,4,2,0,1");
        report.stats["fixtures"] = 6;
    }
    return report;
}

// Ladder pfaffian determinants against brute-force family counts on the
// reduced region, and the collapse to the full-matrix formula at l = n-1.
inline Report run_pfaffian(const Options& opt, const CsvSink& sink = {}) {
    Report report;
    report.suite = "pfaffian";
    detail::Stopwatch timer(report);
    detail::Recorder rec(report, sink);

    for (int n = 4; n <= opt.pfaffian_max_n; ++n) {
        for (int r = 2; r <= 3 && 2 * r <= n; ++r) {
            for (int l = r + 1; l <= n - 1; ++l) {
                const PfaffianGeometry geometry = pfaffian_region(n, l, r);
                const ApInt brute = count_disjoint_families_bruteforce(
                    geometry.region, geometry.sources, geometry.sinks, opt.brute_cap);
                const ApInt formula = multiplicity_pfaffian(n, l, r);
                std::ostringstream input, csv;
                input << "pfaffian n=" << n << " l=" << l << " r=" << r;
                csv << "oracle," << n << ',' << l << ',' << r;
                rec.record(input.str(), brute, formula, csv.str());
                ++report.stats["oracle_cases"];
            }
        }
    }

    for (int n = 4; n <= opt.pfaffian_collapse_max_n; ++n) {
        for (int r = 1; r < n - 1 && 2 * r <= n; ++r) {
            std::ostringstream input, csv;
            input << "full-collapse n=" << n << " r=" << r;
            csv << "full-collapse," << n << ',' << n - 1 << ',' << r;
            rec.record(input.str(), multiplicity_pfaffian_full(n, r),
                       multiplicity_pfaffian(n, n - 1, r), csv.str());
            ++report.stats["collapse_cases"];
        }
    }

    rec.record("fixture pfaffian n=6 l=3 r=2", 8, multiplicity_pfaffian(6, 3, 2),
               "fixture,6,3,2");
    rec.record("fixture pfaffian n=6 l=4 r=2", 13, multiplicity_pfaffian(6, 4, 2),
               "fixture,6,4,2");
    rec.record("fixture pfaffian-full n=4 r=2", 2, multiplicity_pfaffian_full(4, 2),
               "fixture:full,4,3,2");
    report.stats["fixtures"] = 3;
    return report;
}

inline std::vector<Report> run_all(const Options& opt) {
    std::vector<Report> reports;
    reports.push_back(run_closed_form(opt));
    reports.push_back(run_lgv(opt));
    reports.push_back(run_fibonacci(opt));
    reports.push_back(run_power2(opt));
    reports.push_back(run_hockey_stick(opt));
    reports.push_back(run_multiplicity(opt));
    reports.push_back(run_pfaffian(opt));
    return reports;
}

}  // namespace laddercomb::verify
