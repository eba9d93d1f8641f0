#include "ratpath/io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace ratpath {

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string status_word(const CheckLine& line) {
    if (line.skipped) return "SKIP";
    return line.pass ? "PASS" : "FAIL";
}

}  // namespace

Json to_json(const BigInt& value) {
    static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
    static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
    if (value >= kMin && value <= kMax) return value.convert_to<std::int64_t>();
    return value.str();
}

Json to_json(const StatReport& report) {
    Json j;
    j["ret"] = report.ret;
    j["run"] = report.run;
    j["ratio_run"] = report.ratio_run;
    j["inor"] = report.inor;
    j["nc"] = report.nc;
    j["rr"] = report.rr;
    j["rr_tilde"] = report.rr_tilde;
    j["coarea_total"] = report.coarea_total;
    return j;
}

Json to_json(const JointTable& table) {
    Json j;
    j["m"] = table.shape.m;
    j["n"] = table.shape.n;
    j["stats"] = Json::array({table.stat_pair.first, table.stat_pair.second});
    Json rows = Json::array();
    for (const auto& row : table.matrix) {
        Json cells = Json::array();
        for (const auto& cell : row) cells.push_back(to_json(cell));
        rows.push_back(std::move(cells));
    }
    j["matrix"] = std::move(rows);
    return j;
}

Json to_json(const TruncSeries& series) {
    Json j;
    j["order"] = series.order();
    Json coeffs = Json::array();
    for (int k = 0; k <= series.order(); ++k) {
        Json entry;
        entry["t"] = k;
        Json terms = Json::array();
        for (const auto& [exps, coefficient] : series.coeff(k).terms()) {
            Json term;
            term["p"] = exps[0];
            term["q"] = exps[1];
            term["r"] = exps[2];
            term["c"] = coefficient.str();
            terms.push_back(std::move(term));
        }
        entry["terms"] = std::move(terms);
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json to_json(const HitLiftTrace& trace) {
    Json j;
    j["image"] = trace.image.steps();
    j["extra_lift_columns"] = trace.extra_lift_columns;
    j["bits_consumed"] = trace.bits_consumed;
    return j;
}

Json to_json(const RatioSplit& split) {
    Json j;
    j["p1_steps"] = split.p1_steps;
    j["p2_steps"] = split.p2_steps;
    j["sign1"] = split.sign1;
    j["sign2"] = split.sign2;
    j["block_columns"] = split.block_columns;
    return j;
}

Json to_json(const VerifyReport& report) {
    Json j;
    j["applicable"] = report.applicable;
    j["pass"] = report.pass;
    j["detail"] = report.detail;
    return j;
}

Json to_json(const SuiteReport& report) {
    Json j;
    j["suite"] = report.suite;
    j["pass"] = report.pass();
    Json lines = Json::array();
    for (const auto& line : report.lines) {
        Json entry;
        entry["name"] = line.name;
        entry["status"] = line.skipped ? "skip" : (line.pass ? "pass" : "fail");
        entry["detail"] = line.detail;
        lines.push_back(std::move(entry));
    }
    j["lines"] = std::move(lines);
    return j;
}

std::string csv(const JointTable& table) {
    std::ostringstream out;
    out << table.stat_pair.first << "\\" << table.stat_pair.second;
    const int n = static_cast<int>(table.matrix.size());
    for (int col = 1; col <= n; ++col) out << "," << col;
    out << "\n";
    for (int row = 0; row < n; ++row) {
        out << row + 1;
        for (const auto& cell : table.matrix[row]) out << "," << cell.str();
        out << "\n";
    }
    return out.str();
}

std::string csv(const TruncSeries& series) {
    std::ostringstream out;
    out << "t,p,q,r,c\n";
    for (int k = 0; k <= series.order(); ++k)
        for (const auto& [exps, coefficient] : series.coeff(k).terms())
            out << k << "," << exps[0] << "," << exps[1] << "," << exps[2] << ","
                << coefficient.str() << "\n";
    return out.str();
}

std::string csv(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite,check,status,detail\n";
    for (const auto& line : report.lines)
        out << csv_quote(report.suite) << "," << csv_quote(line.name) << ","
            << status_word(line) << "," << csv_quote(line.detail) << "\n";
    return out.str();
}

std::string text(const JointTable& table) {
    const int n = static_cast<int>(table.matrix.size());
    std::ostringstream out;
    out << "(" << table.stat_pair.first << ", " << table.stat_pair.second << ") table for "
        << table.shape.m << "x" << table.shape.n << "\n";
    if (n == 0) {
        out << "(empty)\n";
        return out.str();
    }

    std::vector<std::string> row_labels(n), col_labels(n);
    for (int i = 0; i < n; ++i) {
        row_labels[i] = table.stat_pair.first + "=" + std::to_string(i + 1);
        col_labels[i] = table.stat_pair.second + "=" + std::to_string(i + 1);
    }
    std::size_t label_width = 0;
    for (const auto& label : row_labels) label_width = std::max(label_width, label.size());
    std::vector<std::size_t> widths(n);
    for (int col = 0; col < n; ++col) {
        widths[col] = col_labels[col].size();
        for (int row = 0; row < n; ++row)
            widths[col] = std::max(widths[col], table.matrix[row][col].str().size());
    }

    out << std::string(label_width, ' ');
    for (int col = 0; col < n; ++col) {
        const std::string& label = col_labels[col];
        out << "  " << std::string(widths[col] - label.size(), ' ') << label;
    }
    out << "\n";
    for (int row = 0; row < n; ++row) {
        out << std::string(label_width - row_labels[row].size(), ' ') << row_labels[row];
        for (int col = 0; col < n; ++col) {
            const std::string cell = table.matrix[row][col].str();
            out << "  " << std::string(widths[col] - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    return out.str();
}

std::string text(const TruncSeries& series) {
    std::ostringstream out;
    for (int k = 0; k <= series.order(); ++k)
        out << "t^" << k << ": " << to_string(series.coeff(k)) << "\n";
    return out.str();
}

std::string text(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << "\n";
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& line : report.lines) {
        out << "  " << status_word(line) << " " << line.name;
        if (!line.detail.empty()) out << ": " << line.detail;
        out << "\n";
        if (line.skipped)
            ++skipped;
        else if (line.pass)
            ++passed;
        else
            ++failed;
    }
    out << report.suite << ": " << passed << " passed, " << failed << " failed, " << skipped
        << " skipped\n";
    return out.str();
}

}  // namespace ratpath
