#include "ratpath/verification.hpp"

#include <map>
#include <random>
#include <utility>

#include "ratpath/bijections.hpp"
#include "ratpath/series.hpp"
#include "ratpath/statistics.hpp"

namespace ratpath {

bool SuiteReport::pass() const {
    for (const auto& line : lines)
        if (!line.skipped && !line.pass) return false;
    return true;
}

int SuiteReport::failures() const {
    int count = 0;
    for (const auto& line : lines)
        if (!line.skipped && !line.pass) ++count;
    return count;
}

namespace {

std::string shape_name(int m, int n) {
    return std::to_string(m) + "x" + std::to_string(n);
}

std::string alpha_name(const Composition& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(alpha[i]);
    }
    return out;
}

CheckLine from_report(std::string name, const VerifyReport& report) {
    CheckLine line;
    line.name = std::move(name);
    line.pass = report.pass;
    line.skipped = !report.applicable;
    line.detail = report.detail;
    return line;
}

// The open-problem shape: (3,2) is populated while (2,3) is empty, so the
// square/wide symmetry genuinely stops at m < n.
CheckLine check_counterexample_4x6() {
    CheckLine line;
    line.name = "asymmetry 4x6";
    const DyckPath witness = parse_path("NNNENENNEE", GridShape{4, 6});
    const bool witness_ok = run(witness) == 3 && ret(witness) == 2;
    const JointTable table = joint_table(GridShape{4, 6}, "run", "ret");
    const BigInt& cls32 = table.matrix[2][1];
    const BigInt& cls23 = table.matrix[1][2];
    line.pass = witness_ok && cls32 > 0 && cls32 != cls23;
    line.detail = "witness (run,ret) = (" + std::to_string(run(witness)) + "," +
                  std::to_string(ret(witness)) + "), class (3,2) count " + cls32.str() +
                  ", class (2,3) count " + cls23.str();
    return line;
}

CheckLine check_phi(const GridShape& shape) {
    CheckLine line;
    line.name = "phi " + shape_name(shape.m, shape.n);
    long long count = 0;
    std::string failure;
    for_each_path(shape, [&](const DyckPath& path) {
        if (!failure.empty()) return;
        const DyckPath image = involution_phi(path);
        if (involution_phi(image) != path)
            failure = "phi(phi(P)) != P for " + path.steps();
        else if (run(image) != ret(path) || ret(image) != run(path))
            failure = "(run, ret) not swapped for " + path.steps();
        else if (composition_type(image) != composition_type(path))
            failure = "composition changed for " + path.steps();
        else if (plain_signature(image) != plain_signature(path))
            failure = "plain signature changed for " + path.steps();
        else
            ++count;
    });
    line.pass = failure.empty();
    line.detail = line.pass ? std::to_string(count) + " paths" : failure;
    return line;
}

CheckLine check_psi(const GridShape& shape) {
    CheckLine line;
    line.name = "psi " + shape_name(shape.m, shape.n);
    long long count = 0;
    std::string failure;
    for_each_path(shape, [&](const DyckPath& path) {
        if (!failure.empty()) return;
        const DyckPath image = involution_psi(path);
        if (involution_psi(image) != path)
            failure = "psi(psi(P)) != P for " + path.steps();
        else if (ratio_run(image) != ret(path) || ret(image) != ratio_run(path))
            failure = "(ratio_run, ret) not swapped for " + path.steps();
        else if (composition_type(image) != composition_type(path))
            failure = "composition changed for " + path.steps();
        else {
            const RatioSplit before = ratio_split(path);
            const RatioSplit after = ratio_split(image);
            if (before.sign1 != after.sign1)
                failure = "sign1 changed for " + path.steps();
            else if (before.sign2 != after.sign2)
                failure = "sign2 changed for " + path.steps();
            else
                ++count;
        }
    });
    line.pass = failure.empty();
    line.detail = line.pass ? std::to_string(count) + " paths" : failure;
    return line;
}

CheckLine check_roundtrips(const GridShape& shape) {
    CheckLine line;
    line.name = "roundtrips " + shape_name(shape.m, shape.n);
    long long paths = 0;
    long long lift_pairs = 0;
    std::string failure;
    for_each_path(shape, [&](const DyckPath& path) {
        if (!failure.empty()) return;
        if (from_coarea(coarea_sequence(path), shape) != path) {
            failure = "coarea roundtrip failed for " + path.steps();
            return;
        }
        if (from_comp_signature(composition_type(path), full_signature(path), shape) != path) {
            failure = "signature roundtrip failed for " + path.steps();
            return;
        }
        const int r = rr_direct(path);
        if (ret(path) == r) {
            const int b = run(path) - r;
            for (int a = 0; a <= b; ++a) {
                const HitLiftTrace trace = hit_and_lift(path, a, b);
                if (inverse_hit_and_lift(trace.image, a, b) != path) {
                    failure = "hit-and-lift roundtrip failed for " + path.steps() + " at a=" +
                              std::to_string(a) + " b=" + std::to_string(b);
                    return;
                }
                ++lift_pairs;
            }
        }
        ++paths;
    });
    line.pass = failure.empty();
    line.detail = line.pass ? std::to_string(paths) + " paths, " + std::to_string(lift_pairs) +
                                  " hit-and-lift round trips"
                            : failure;
    return line;
}

CheckLine check_one_run_rows(int n_max) {
    CheckLine line;
    line.name = "one-run rows";
    const TruncSeries f = extract_F(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const JointTable table = joint_table(GridShape{n, n}, "run", "ret");
        PolyPQR expected;
        for (int l = 1; l <= n; ++l)
            expected += PolyPQR::monomial(0, l, 0, table.matrix[0][l - 1]);
        if (!(expected == f.coeff(n))) {
            line.pass = false;
            line.detail = "t^" + std::to_string(n) + ": F gives " + to_string(f.coeff(n)) +
                          ", table row run=1 gives " + to_string(expected);
            return line;
        }
    }
    line.pass = true;
    line.detail = "F matches the run=1 table rows through t^" + std::to_string(n_max);
    return line;
}

CheckLine check_return_weights(int n_max) {
    CheckLine line;
    line.name = "return weights";
    const TruncSeries g = extract_G(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const JointTable table = joint_table(GridShape{n, n}, "run", "ret");
        BigInt expected = 0;
        for (int l = 1; l <= n; ++l) expected += l * table.matrix[0][l - 1];
        if (!(PolyPQR(expected) == g.coeff(n))) {
            line.pass = false;
            line.detail = "t^" + std::to_string(n) + ": G gives " + to_string(g.coeff(n)) +
                          ", weighted run=1 row gives " + expected.str();
            return line;
        }
    }
    line.pass = true;
    line.detail = "G matches the return-weighted run=1 rows through t^" + std::to_string(n_max);
    return line;
}

CheckLine check_series_roundtrips(std::uint64_t seed) {
    CheckLine line;
    line.name = "sqrt and inverse round trips";
    std::mt19937_64 rng(seed);
    constexpr int kOrder = 8;
    constexpr int kTrials = 5;
    std::string failure;
    for (int trial = 0; trial < kTrials && failure.empty(); ++trial) {
        TruncSeries s(kOrder, 1);
        for (int k = 1; k <= kOrder; ++k) {
            PolyPQR c;
            const int terms = static_cast<int>(rng() % 3) + 1;
            for (int i = 0; i < terms; ++i) {
                const int ep = static_cast<int>(rng() % 3);
                const int eq = static_cast<int>(rng() % 3);
                const int er = static_cast<int>(rng() % 3);
                const long long value = static_cast<long long>(rng() % 19) - 9;
                c += PolyPQR::monomial(ep, eq, er, value);
            }
            s.set_coeff(k, std::move(c));
        }
        if (!(sqrt_unit(s * s) == s))
            failure = "sqrt(S*S) != S in trial " + std::to_string(trial);
        else if (!(s * inverse_unit(s) == TruncSeries(kOrder, 1)))
            failure = "S * inverse(S) != 1 in trial " + std::to_string(trial);
        else if (!(div_by_unit(s * s, s) == s))
            failure = "(S*S)/S != S in trial " + std::to_string(trial);
    }
    line.pass = failure.empty();
    line.detail = line.pass
                      ? std::to_string(kTrials) + " seeded trials at order " + std::to_string(kOrder)
                      : failure + " (seed " + std::to_string(seed) + ")";
    return line;
}

CheckLine check_t_identity(int n, int max_m) {
    CheckLine line;
    line.name = "t-identity n=" + std::to_string(n);
    long long classes = 0;
    std::string failure;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)) && failure.empty(); ++mask) {
        Composition alpha;
        int part = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                alpha.push_back(part);
                part = 1;
            } else {
                ++part;
            }
        }
        alpha.push_back(part);
        const int len = static_cast<int>(alpha.size());

        for (int m = n + 1; m <= max_m && failure.empty(); ++m) {
            std::map<std::pair<int, int>, BigInt> by_class;
            for_each_path(m, alpha, [&](const DyckPath& path) {
                by_class[{run(path), ret(path)}] += 1;
            });
            const int r = rr_formula(alpha, m);
            for (int k = 1; k <= n && failure.empty(); ++k) {
                for (int l = 1; l <= n; ++l) {
                    BigInt expected = 0;
                    if (k >= r && l >= r && k + l - r <= len)
                        expected = count_T(m, alpha, k + l - r);
                    const auto it = by_class.find({k, l});
                    const BigInt actual = it == by_class.end() ? BigInt(0) : it->second;
                    if (expected != actual) {
                        failure = "m=" + std::to_string(m) + " alpha=(" + alpha_name(alpha) +
                                  ") class (" + std::to_string(k) + "," + std::to_string(l) +
                                  "): T-set count " + expected.str() + ", enumeration " +
                                  actual.str();
                        break;
                    }
                    ++classes;
                }
            }
        }
    }
    line.pass = failure.empty();
    line.detail = line.pass
                      ? std::to_string(classes) + " classes checked for m <= " + std::to_string(max_m)
                      : failure;
    return line;
}

}  // namespace

SuiteReport suite_symmetry(const SuiteBounds& bounds) {
    SuiteReport report{"symmetry", {}};
    for (int m = 2; m <= bounds.max_m; ++m)
        for (int n = 1; n < m; ++n)
            report.lines.push_back(
                from_report("symmetry " + shape_name(m, n), verify_symmetry(GridShape{m, n})));
    for (int n = 1; n <= bounds.max_square; ++n)
        report.lines.push_back(
            from_report("symmetry " + shape_name(n, n), verify_symmetry(GridShape{n, n})));
    report.lines.push_back(check_counterexample_4x6());
    return report;
}

SuiteReport suite_involution(const SuiteBounds& bounds) {
    SuiteReport report{"involution", {}};
    for (int m = 2; m <= bounds.max_m; ++m) {
        for (int n = 1; n < m; ++n) {
            const GridShape shape{m, n};
            report.lines.push_back(check_phi(shape));
            report.lines.push_back(check_psi(shape));
            report.lines.push_back(check_roundtrips(shape));
        }
    }
    return report;
}

SuiteReport suite_hankel(const SuiteBounds& bounds) {
    SuiteReport report{"hankel", {}};
    for (int m = 2; m <= bounds.hankel_m; ++m)
        for (int n = 1; 2 * n <= m; ++n)
            report.lines.push_back(
                from_report("hankel " + shape_name(m, n), verify_hankel(GridShape{m, n})));
    return report;
}

SuiteReport suite_series_vs_enum(const SuiteBounds& bounds) {
    SuiteReport report{"series-vs-enum", {}};
    report.lines.push_back(from_report("crosscheck", crosscheck_enumeration(bounds.series_n)));
    report.lines.push_back(check_one_run_rows(bounds.series_n));
    report.lines.push_back(check_return_weights(bounds.series_n));
    report.lines.push_back(check_series_roundtrips(bounds.seed));
    return report;
}

SuiteReport suite_t_identity(const SuiteBounds& bounds) {
    SuiteReport report{"t-identity", {}};
    for (int n = 1; n <= bounds.tset_n; ++n)
        report.lines.push_back(check_t_identity(n, bounds.tset_m));
    return report;
}

SuiteReport suite_symmetry_single(const GridShape& shape) {
    SuiteReport report{"symmetry", {}};
    report.lines.push_back(
        from_report("symmetry " + shape_name(shape.m, shape.n), verify_symmetry(shape)));
    return report;
}

SuiteReport suite_hankel_single(const GridShape& shape) {
    SuiteReport report{"hankel", {}};
    report.lines.push_back(
        from_report("hankel " + shape_name(shape.m, shape.n), verify_hankel(shape)));
    return report;
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteBounds& bounds) {
    std::vector<SuiteReport> reports;
    const bool all = name == "all";
    if (all || name == "symmetry") reports.push_back(suite_symmetry(bounds));
    if (all || name == "involution") reports.push_back(suite_involution(bounds));
    if (all || name == "hankel") reports.push_back(suite_hankel(bounds));
    if (all || name == "series-vs-enum") reports.push_back(suite_series_vs_enum(bounds));
    if (all || name == "t-identity") reports.push_back(suite_t_identity(bounds));
    if (reports.empty()) throw Error(Errc::BadArgument, "unknown suite: " + name);
    return reports;
}

}  // namespace ratpath
