#include "ratpath/cli.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "ratpath/bijections.hpp"
#include "ratpath/enumeration.hpp"
#include "ratpath/io.hpp"
#include "ratpath/series.hpp"
#include "ratpath/statistics.hpp"
#include "ratpath/verification.hpp"

namespace ratpath {

namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        if (value < static_cast<long long>(INT32_MIN) || value > static_cast<long long>(INT32_MAX))
            throw std::out_of_range(text);
        return static_cast<int>(value);
    } catch (const std::exception&) {
        throw Error(Errc::BadArgument, "bad " + what + ": '" + text + "'");
    }
}

Composition parse_alpha(const std::string& text) {
    Composition alpha;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) alpha.push_back(parse_int(part, "composition part"));
    if (alpha.empty()) throw Error(Errc::BadArgument, "empty composition");
    return alpha;
}

std::pair<std::string, std::string> parse_stat_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw Error(Errc::BadArgument, "--stats wants two comma separated names, e.g. run,ret");
    return {text.substr(0, comma), text.substr(comma + 1)};
}

// Build the path from the steps plus optional shape flags; with no flags the
// shape is inferred from the step counts.
DyckPath make_path(const std::string& steps, int m, int n) {
    if ((m >= 0) != (n >= 0)) throw Error(Errc::BadArgument, "give both --m and --n or neither");
    if (m >= 0) return parse_path(steps, GridShape{m, n});
    int easts = 0;
    int norths = 0;
    for (const char c : steps) {
        if (c == 'E') ++easts;
        if (c == 'N') ++norths;
    }
    return parse_path(steps, GridShape{easts, norths});
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string render_rows(const Rows& rows, const std::string& format) {
    std::string out;
    for (const auto& [key, value] : rows) {
        out += key;
        out += format == "csv" ? "," : " ";
        out += value;
        out += '\n';
    }
    return out;
}

int cmd_stats(const std::string& steps, int m, int n, const std::string& format, std::ostream& out) {
    const DyckPath path = make_path(steps, m, n);
    const StatReport report = stat_report(path);
    const CoareaSeq coarea = coarea_sequence(path);
    const bool wide = path.m() > path.n();

    if (format == "json") {
        Json j;
        j["m"] = path.m();
        j["n"] = path.n();
        j["steps"] = path.steps();
        j.update(to_json(report));
        j["coarea"] = coarea;
        if (path.n() >= 1) j["composition"] = composition_type(path);
        j["full_signature"] = full_signature(path);
        if (wide) j["plain_signature"] = plain_signature(path);
        out << j.dump(2) << "\n";
        return 0;
    }

    Rows rows;
    rows.emplace_back("m", std::to_string(path.m()));
    rows.emplace_back("n", std::to_string(path.n()));
    rows.emplace_back("steps", path.steps());
    rows.emplace_back("ret", std::to_string(report.ret));
    rows.emplace_back("run", std::to_string(report.run));
    rows.emplace_back("ratio_run", std::to_string(report.ratio_run));
    rows.emplace_back("inor", std::to_string(report.inor));
    rows.emplace_back("nc", std::to_string(report.nc));
    rows.emplace_back("rr", std::to_string(report.rr));
    rows.emplace_back("rr_tilde", std::to_string(report.rr_tilde));
    rows.emplace_back("coarea_total", std::to_string(report.coarea_total));
    rows.emplace_back("coarea", join(coarea));
    if (path.n() >= 1) rows.emplace_back("composition", join(composition_type(path)));
    rows.emplace_back("full_signature", full_signature(path));
    if (wide) rows.emplace_back("plain_signature", plain_signature(path));
    out << render_rows(rows, format);
    return 0;
}

int cmd_table(int m, int n, const std::string& alpha_text, const std::string& stats_text,
              const EnumLimits& limits, const std::string& format, std::ostream& out) {
    const auto [stat1, stat2] = parse_stat_pair(stats_text);
    if (!alpha_text.empty() && n >= 0)
        throw Error(Errc::BadArgument, "--alpha already fixes n, drop --n");
    if (m < 0) throw Error(Errc::BadArgument, "table needs --m");
    const JointTable table = alpha_text.empty()
        ? [&] {
              if (n < 0) throw Error(Errc::BadArgument, "table needs --n or --alpha");
              return joint_table(GridShape{m, n}, stat1, stat2, limits);
          }()
        : joint_table_by_composition(m, parse_alpha(alpha_text), stat1, stat2, limits);
    if (format == "json")
        out << to_json(table).dump(2) << "\n";
    else if (format == "csv")
        out << csv(table);
    else
        out << text(table);
    return 0;
}

int cmd_bijection(const std::string& steps, int m, int n, const std::string& map, int a, int b,
                  const std::string& format, std::ostream& out) {
    const DyckPath path = make_path(steps, m, n);
    const bool has_ab = a >= 0 || b >= 0;
    if (has_ab && (a < 0 || b < 0)) throw Error(Errc::BadArgument, "give both --a and --b or neither");

    Rows rows;
    rows.emplace_back("map", map);
    rows.emplace_back("input", path.steps());
    Json j;
    j["map"] = map;
    j["input"] = path.steps();

    if (map == "phi" || (map == "psi" && !has_ab)) {
        if (has_ab) throw Error(Errc::BadArgument, "--a/--b do not apply to phi");
        const DyckPath image = map == "phi" ? involution_phi(path) : involution_psi(path);
        rows.emplace_back("image", image.steps());
        j["image"] = image.steps();
    } else if (map == "psi") {
        const DyckPath image = block_hit_and_lift(path, a, b);
        rows.emplace_back("a", std::to_string(a));
        rows.emplace_back("b", std::to_string(b));
        rows.emplace_back("image", image.steps());
        j["a"] = a;
        j["b"] = b;
        j["image"] = image.steps();
    } else if (map == "hitlift") {
        if (!has_ab) throw Error(Errc::BadArgument, "hitlift needs --a and --b");
        const HitLiftTrace trace = hit_and_lift(path, a, b);
        rows.emplace_back("a", std::to_string(a));
        rows.emplace_back("b", std::to_string(b));
        rows.emplace_back("image", trace.image.steps());
        rows.emplace_back("extra_lift_columns", join(trace.extra_lift_columns));
        rows.emplace_back("bits_consumed", std::to_string(trace.bits_consumed));
        j["a"] = a;
        j["b"] = b;
        j.update(to_json(trace));
    } else {  // inv-hitlift
        if (!has_ab) throw Error(Errc::BadArgument, "inv-hitlift needs --a and --b");
        const DyckPath image = inverse_hit_and_lift(path, a, b);
        rows.emplace_back("a", std::to_string(a));
        rows.emplace_back("b", std::to_string(b));
        rows.emplace_back("image", image.steps());
        j["a"] = a;
        j["b"] = b;
        j["image"] = image.steps();
    }

    if (format == "json")
        out << j.dump(2) << "\n";
    else
        out << render_rows(rows, format);
    return 0;
}

TruncSeries apply_at(TruncSeries series, const std::vector<std::string>& ats) {
    for (const auto& item : ats) {
        const auto eq = item.find('=');
        if (eq != 1 || item.size() < 3 ||
            (item[0] != 'p' && item[0] != 'q' && item[0] != 'r'))
            throw Error(Errc::BadArgument, "bad --at, expected p=<int>, q=<int> or r=<int>: '" + item + "'");
        series = specialize(series, item[0], BigInt(parse_int(item.substr(2), "--at value")));
    }
    return series;
}

int cmd_series(const std::string& family, int k, const std::string& extract, const std::string& method,
               const std::vector<std::string>& ats, int order, const std::string& format, std::ostream& out) {
    if (order < 0) throw Error(Errc::BadArgument, "--order must be nonnegative");
    TruncSeries series = [&] {
        if (!extract.empty()) {
            if (family != "classical") throw Error(Errc::BadArgument, "--extract applies to --family classical");
            return extract == "F" ? extract_F(order) : extract_G(order);
        }
        if (family == "classical")
            return method == "closed-form" ? closed_form_classical(order).c : solve_classical(order).c;
        if (method == "closed-form")
            throw Error(Errc::BadArgument, "no closed form for --family fuss, use --method iterate");
        if (k < 1) throw Error(Errc::BadArgument, "--k must be at least 1");
        return solve_fuss(k, order).c;
    }();
    series = apply_at(series, ats);
    if (format == "json")
        out << to_json(series).dump(2) << "\n";
    else if (format == "csv")
        out << csv(series);
    else
        out << text(series);
    return 0;
}

int cmd_verify(const std::string& suite, int m, int n, int max_m, int max_square, int max_n,
               std::uint64_t seed, const std::string& format, std::ostream& out) {
    std::vector<SuiteReport> reports;
    if (m >= 0 || n >= 0) {
        if (m < 0 || n < 0) throw Error(Errc::BadArgument, "give both --m and --n or neither");
        const GridShape shape{m, n};
        if (suite == "symmetry")
            reports.push_back(suite_symmetry_single(shape));
        else if (suite == "hankel")
            reports.push_back(suite_hankel_single(shape));
        else
            throw Error(Errc::BadArgument, "--m/--n apply to the symmetry and hankel suites");
    } else {
        SuiteBounds bounds;
        if (max_m >= 0) {
            bounds.max_m = max_m;
            bounds.hankel_m = max_m;
            bounds.tset_m = max_m;
        }
        if (max_square >= 0) bounds.max_square = max_square;
        if (max_n >= 0) {
            bounds.series_n = max_n;
            bounds.tset_n = max_n;
        }
        bounds.seed = seed;
        reports = run_suites(suite, bounds);
    }

    int failures = 0;
    for (const auto& report : reports) failures += report.failures();

    if (format == "json") {
        Json j = Json::array();
        for (const auto& report : reports) j.push_back(to_json(report));
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::string block = csv(reports[i]);
            if (i > 0) block.erase(0, block.find('\n') + 1);
            out << block;
        }
    } else {
        for (const auto& report : reports) out << text(report);
        out << "overall: " << (failures == 0 ? "pass" : std::to_string(failures) + " failure(s)") << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"rational Dyck path statistics, bijections and generating functions"};
    app.name("ratpath");
    app.require_subcommand(0, 1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    int order = 8;
    app.add_option("--order", order, "series truncation order")->capture_default_str();
    long long cap = 100000000;
    app.add_option("--cap", cap, "refuse enumerations larger than this")->capture_default_str();
    bool force = false;
    app.add_flag("--force", force, "enumerate past the cap");
    std::uint64_t seed = 12345;
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();

    auto* stats_cmd = app.add_subcommand("stats", "statistics of one path");
    stats_cmd->fallthrough();
    std::string stats_path;
    int stats_m = -1;
    int stats_n = -1;
    stats_cmd->add_option("--path", stats_path, "step string over {N, E}")->required();
    stats_cmd->add_option("--m", stats_m, "east step count");
    stats_cmd->add_option("--n", stats_n, "north step count");

    auto* table_cmd = app.add_subcommand("table", "joint distribution of two statistics");
    table_cmd->fallthrough();
    int table_m = -1;
    int table_n = -1;
    std::string table_alpha;
    std::string table_stats = "run,ret";
    table_cmd->add_option("--m", table_m, "east step count");
    table_cmd->add_option("--n", table_n, "north step count");
    table_cmd->add_option("--alpha", table_alpha, "restrict to one composition, e.g. 1,2,1");
    table_cmd->add_option("--stats", table_stats, "statistic pair")->capture_default_str();

    auto* bij_cmd = app.add_subcommand("bijection", "apply a bijection to one path");
    bij_cmd->fallthrough();
    std::string bij_path;
    std::string bij_map;
    int bij_m = -1;
    int bij_n = -1;
    int bij_a = -1;
    int bij_b = -1;
    bij_cmd->add_option("--path", bij_path, "step string over {N, E}")->required();
    bij_cmd->add_option("--m", bij_m, "east step count");
    bij_cmd->add_option("--n", bij_n, "north step count");
    bij_cmd->add_option("--map", bij_map, "which map to apply")
        ->required()
        ->check(CLI::IsMember({"phi", "psi", "hitlift", "inv-hitlift"}));
    bij_cmd->add_option("--a", bij_a, "lifts kept in the image class");
    bij_cmd->add_option("--b", bij_b, "total lift budget");

    auto* series_cmd = app.add_subcommand("series", "generating function coefficients");
    series_cmd->fallthrough();
    std::string family = "classical";
    std::string extract;
    std::string method = "iterate";
    int fuss_k = 2;
    std::vector<std::string> ats;
    series_cmd->add_option("--family", family, "equation system")
        ->check(CLI::IsMember({"classical", "fuss"}))
        ->capture_default_str();
    series_cmd->add_option("--k", fuss_k, "stretch factor for --family fuss")->capture_default_str();
    series_cmd->add_option("--extract", extract, "derived series")->check(CLI::IsMember({"F", "G"}));
    series_cmd->add_option("--method", method, "how to produce the series")
        ->check(CLI::IsMember({"iterate", "closed-form"}))
        ->capture_default_str();
    series_cmd->add_option("--at", ats, "specialize a variable, e.g. r=1 (repeatable)");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->fallthrough();
    std::string suite;
    int verify_max_m = -1;
    int verify_max_square = -1;
    int verify_max_n = -1;
    int verify_m = -1;
    int verify_n = -1;
    verify_cmd->add_option("--suite", suite, "suite name or all")
        ->required()
        ->check(CLI::IsMember({"symmetry", "involution", "hankel", "series-vs-enum", "t-identity", "all"}));
    verify_cmd->add_option("--max-m", verify_max_m, "shape sweep bound");
    verify_cmd->add_option("--max-square", verify_max_square, "square shape sweep bound");
    verify_cmd->add_option("--max-n", verify_max_n, "series order and composition size bound");
    verify_cmd->add_option("--m", verify_m, "check a single shape (with --n)");
    verify_cmd->add_option("--n", verify_n, "check a single shape (with --m)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(stats_cmd)) return cmd_stats(stats_path, stats_m, stats_n, format, out);
        if (app.got_subcommand(table_cmd)) {
            EnumLimits limits;
            limits.cap = cap;
            limits.force = force;
            return cmd_table(table_m, table_n, table_alpha, table_stats, limits, format, out);
        }
        if (app.got_subcommand(bij_cmd))
            return cmd_bijection(bij_path, bij_m, bij_n, bij_map, bij_a, bij_b, format, out);
        if (app.got_subcommand(series_cmd))
            return cmd_series(family, fuss_k, extract, method, ats, order, format, out);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(suite, verify_m, verify_n, verify_max_m, verify_max_square, verify_max_n,
                              seed, format, out);
        err << app.help();
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ratpath
