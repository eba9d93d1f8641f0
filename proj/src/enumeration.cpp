#include "ratpath/enumeration.hpp"

#include "ratpath/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

namespace ratpath {

namespace {

void check_alpha(const Composition& alpha) {
    for (int part : alpha)
        if (part < 1)
            throw Error(Errc::BadArgument, "composition parts must be positive");
}

long long alpha_sum(const Composition& alpha) {
    long long n = 0;
    for (int part : alpha) n += part;
    return n;
}

// Depth-first generation from a partial step string, N before E.
void walk(const GridShape& shape, std::string& steps, int x, int y,
          const std::function<void(const DyckPath&)>& visit) {
    if (x == shape.m && y == shape.n) {
        visit(DyckPath(shape, steps));
        return;
    }
    if (y < shape.n) {
        steps += 'N';
        walk(shape, steps, x, y + 1, visit);
        steps.pop_back();
    }
    if (x < shape.m && rank(shape, x + 1, y) >= 0) {
        steps += 'E';
        walk(shape, steps, x + 1, y, visit);
        steps.pop_back();
    }
}

// Composition-constrained variant: place the next component or a filler east.
void walk_comp(const GridShape& shape, const Composition& alpha, std::string& steps,
               int x, int y, std::size_t used, int fillers_left,
               const std::function<void(const DyckPath&)>& visit) {
    if (x == shape.m) {
        if (y == shape.n && used == alpha.size())
            visit(DyckPath(shape, steps));
        return;
    }
    if (used < alpha.size() &&
        rank(shape, x + 1, y + alpha[used]) >= 0) {
        steps.append(alpha[used], 'N');
        steps += 'E';
        walk_comp(shape, alpha, steps, x + 1, y + alpha[used], used + 1,
                  fillers_left, visit);
        steps.resize(steps.size() - alpha[used] - 1);
    }
    if (fillers_left > 0 && rank(shape, x + 1, y) >= 0) {
        steps += 'E';
        walk_comp(shape, alpha, steps, x + 1, y, used, fillers_left - 1, visit);
        steps.pop_back();
    }
}

void check_cap(const BigInt& count, const EnumLimits& limits) {
    if (!limits.force && count > limits.cap)
        throw Error(Errc::CapExceeded,
                    "enumeration of " + count.str() + " paths exceeds the cap of " +
                        limits.cap.str());
}

// All extendable prefixes of the given length, lexicographic.  Every prefix
// above the diagonal completes to at least one path, so none of these shards
// is empty.
std::vector<std::string> shard_prefixes(const GridShape& shape, int length) {
    std::vector<std::string> out;
    std::string steps;
    std::function<void(int, int)> grow = [&](int x, int y) {
        if (static_cast<int>(steps.size()) == length) {
            out.push_back(steps);
            return;
        }
        if (y < shape.n) {
            steps += 'N';
            grow(x, y + 1);
            steps.pop_back();
        }
        if (x < shape.m && rank(shape, x + 1, y) >= 0) {
            steps += 'E';
            grow(x + 1, y);
            steps.pop_back();
        }
    };
    grow(0, 0);
    return out;
}

using Matrix = std::vector<std::vector<BigInt>>;

Matrix zero_matrix(int n) {
    return Matrix(n, std::vector<BigInt>(n));
}

std::function<int(const DyckPath&)> stat_evaluator(const std::string& name,
                                                   const GridShape& shape) {
    if (name == "run") return [](const DyckPath& p) { return run(p); };
    if (name == "ret") return [](const DyckPath& p) { return ret(p); };
    if (name == "inor") return [](const DyckPath& p) { return inor(p); };
    if (name == "ratio_run") {
        if (shape.m < shape.n)
            throw Error(Errc::ShapeUnsupported, "ratio_run table needs m >= n");
        return [](const DyckPath& p) { return ratio_run(p); };
    }
    throw Error(Errc::BadArgument, "unknown statistic '" + name +
                                       "' (want run, ret, ratio_run or inor)");
}

void tally(Matrix& matrix, int n, int v1, int v2) {
    if (v1 < 1 || v1 > n || v2 < 1 || v2 > n)
        throw Error(Errc::InternalInvariant, "statistic value out of [1, n]");
    ++matrix[v1 - 1][v2 - 1];
}

// Shard-parallel fold of the statistic pair over the whole shape.
Matrix fold_table(const GridShape& shape, const std::string& stat1,
                  const std::string& stat2, const EnumLimits& limits) {
    auto eval1 = stat_evaluator(stat1, shape);
    auto eval2 = stat_evaluator(stat2, shape);
    const int n = shape.n;
    const BigInt total = count_paths(shape);
    check_cap(total, limits);
    if (n == 0) return zero_matrix(0);  // statistics take no values in [1, n]

    int threads = limits.threads > 0
                      ? limits.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (total < limits.parallel_threshold || threads == 1) {
        Matrix matrix = zero_matrix(n);
        for_each_path(shape, [&](const DyckPath& p) {
            tally(matrix, n, eval1(p), eval2(p));
        });
        return matrix;
    }

    const int prefix_len = std::min(6, shape.m + shape.n);
    const std::vector<std::string> prefixes = shard_prefixes(shape, prefix_len);
    std::vector<Matrix> parts(prefixes.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= prefixes.size()) return;
            Matrix local = zero_matrix(n);
            std::string steps = prefixes[idx];
            int x = 0, y = 0;
            for (char c : steps) {
                if (c == 'N') ++y; else ++x;
            }
            walk(shape, steps, x, y, [&](const DyckPath& p) {
                tally(local, n, eval1(p), eval2(p));
            });
            parts[idx] = std::move(local);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    Matrix matrix = zero_matrix(n);
    for (const Matrix& part : parts)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) matrix[i][j] += part[i][j];
    return matrix;
}

VerifyReport symmetry_of(const JointTable& table, bool applicable,
                         const std::string& context) {
    const int n = static_cast<int>(table.matrix.size());
    VerifyReport report;
    report.applicable = applicable;
    report.pass = true;
    for (int i = 0; i < n && report.pass; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (table.matrix[i][j] != table.matrix[j][i]) {
                report.pass = false;
                report.detail = context + ": entry (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") = " +
                                table.matrix[i][j].str() + " but (" +
                                std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                ") = " + table.matrix[j][i].str();
                break;
            }
        }
    }
    if (report.pass) report.detail = context + ": symmetric";
    if (!applicable)
        report.detail += " (m < n: symmetry is not claimed for this shape)";
    return report;
}

}  // namespace

void for_each_path(const GridShape& shape,
                   const std::function<void(const DyckPath&)>& visit) {
    if (shape.m < 1 || shape.n < 0)
        throw Error(Errc::BadArgument, "grid shape must have m >= 1, n >= 0");
    std::string steps;
    steps.reserve(shape.m + shape.n);
    walk(shape, steps, 0, 0, visit);
}

void for_each_path(int m, const Composition& alpha,
                   const std::function<void(const DyckPath&)>& visit) {
    check_alpha(alpha);
    const long long n = alpha_sum(alpha);
    GridShape shape{m, static_cast<int>(n)};
    if (m < 1)
        throw Error(Errc::BadArgument, "grid shape must have m >= 1");
    std::string steps;
    steps.reserve(m + n);
    walk_comp(shape, alpha, steps, 0, 0, 0,
              m - static_cast<int>(alpha.size()), visit);
}

std::vector<DyckPath> all_paths(const GridShape& shape, const EnumLimits& limits) {
    check_cap(count_paths(shape), limits);
    std::vector<DyckPath> out;
    for_each_path(shape, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

std::vector<DyckPath> all_paths(int m, const Composition& alpha,
                                const EnumLimits& limits) {
    check_cap(count_paths(GridShape{m, static_cast<int>(alpha_sum(alpha))}), limits);
    std::vector<DyckPath> out;
    for_each_path(m, alpha, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

BigInt count_paths(const GridShape& shape) {
    if (shape.m < 1 || shape.n < 0)
        throw Error(Errc::BadArgument, "grid shape must have m >= 1, n >= 0");
    // f[j] = number of partial paths ending at (i, j), swept column by column.
    std::vector<BigInt> f(shape.n + 1);
    f[0] = 1;
    for (int j = 1; j <= shape.n; ++j) f[j] = 1;  // i = 0 column: norths only
    for (int i = 1; i <= shape.m; ++i) {
        for (int j = 0; j <= shape.n; ++j) {
            if (rank(shape, i, j) < 0) {
                f[j] = 0;
                continue;
            }
            if (j > 0) f[j] += f[j - 1];
        }
    }
    return f[shape.n];
}

JointTable joint_table(const GridShape& shape, const std::string& stat1,
                       const std::string& stat2, const EnumLimits& limits) {
    JointTable table;
    table.shape = shape;
    table.stat_pair = {stat1, stat2};
    table.matrix = fold_table(shape, stat1, stat2, limits);
    return table;
}

JointTable joint_table_by_composition(int m, const Composition& alpha,
                                      const std::string& stat1,
                                      const std::string& stat2,
                                      const EnumLimits& limits) {
    check_alpha(alpha);
    const int n = static_cast<int>(alpha_sum(alpha));
    GridShape shape{m, n};
    auto eval1 = stat_evaluator(stat1, shape);
    auto eval2 = stat_evaluator(stat2, shape);
    check_cap(count_paths(shape), limits);
    JointTable table;
    table.shape = shape;
    table.stat_pair = {stat1, stat2};
    table.matrix = zero_matrix(n);
    for_each_path(m, alpha, [&](const DyckPath& p) {
        tally(table.matrix, n, eval1(p), eval2(p));
    });
    return table;
}

BigInt count_T(int m, const Composition& alpha, int j) {
    check_alpha(alpha);
    const long long n = alpha_sum(alpha);
    if (m <= n)
        throw Error(Errc::ShapeUnsupported, "count_T needs m > |alpha|");
    const int l = static_cast<int>(alpha.size());
    if (j < 0 || j > l)
        throw Error(Errc::BadArgument, "count_T needs 0 <= j <= number of parts");
    GridShape shape{m, static_cast<int>(n)};
    std::vector<long long> prefix(l + 1, 0);
    for (int i = 0; i < l; ++i) prefix[i + 1] = prefix[i] + alpha[i];

    // Admissible next point: the far corner, or rank at least n.
    auto admissible = [&](long long x, long long y) {
        if (x == m && y == n) return true;
        return rank(shape, x, y) >= n;
    };
    std::vector<std::vector<std::optional<BigInt>>> memo(
        m + 1, std::vector<std::optional<BigInt>>(l + 1));
    std::function<BigInt(int, int)> go = [&](int x, int used) -> BigInt {
        const long long y = prefix[used];
        if (x == m) return (y == n && used == l) ? 1 : 0;
        if (memo[x][used]) return *memo[x][used];
        BigInt total = 0;
        if (used < l && admissible(x + 1, prefix[used + 1]))
            total += go(x + 1, used + 1);
        if (admissible(x + 1, y)) total += go(x + 1, used);
        memo[x][used] = total;
        return total;
    };
    const int x0 = j + 1;
    if (!admissible(x0, prefix[j])) return 0;
    return go(x0, j);
}

std::set<Signature> enumerate_T_signatures(int m, const Composition& alpha, int j) {
    check_alpha(alpha);
    const long long n = alpha_sum(alpha);
    if (m <= n)
        throw Error(Errc::ShapeUnsupported, "enumerate_T_signatures needs m > |alpha|");
    const int l = static_cast<int>(alpha.size());
    if (j < 0 || j > l)
        throw Error(Errc::BadArgument,
                    "enumerate_T_signatures needs 0 <= j <= number of parts");
    GridShape shape{m, static_cast<int>(n)};
    std::vector<long long> prefix(l + 1, 0);
    for (int i = 0; i < l; ++i) prefix[i + 1] = prefix[i] + alpha[i];
    auto admissible = [&](long long x, long long y) {
        if (x == m && y == n) return true;
        return rank(shape, x, y) >= n;
    };
    std::set<Signature> out;
    Signature bits;
    std::function<void(int, int)> go = [&](int x, int used) {
        if (x == m) {
            if (prefix[used] == n && used == l) out.insert(bits);
            return;
        }
        if (used < l && admissible(x + 1, prefix[used + 1])) {
            bits += '1';
            go(x + 1, used + 1);
            bits.pop_back();
        }
        if (admissible(x + 1, prefix[used])) {
            bits += '0';
            go(x + 1, used);
            bits.pop_back();
        }
    };
    const int x0 = j + 1;
    if (admissible(x0, prefix[j])) go(x0, j);
    return out;
}

VerifyReport verify_symmetry(const GridShape& shape, const std::string& stat1,
                             const std::string& stat2, const EnumLimits& limits) {
    JointTable table = joint_table(shape, stat1, stat2, limits);
    const std::string context = std::to_string(shape.m) + "x" +
                                std::to_string(shape.n) + " (" + stat1 + "," +
                                stat2 + ")";
    return symmetry_of(table, shape.m >= shape.n, context);
}

VerifyReport verify_symmetry(int m, const Composition& alpha,
                             const std::string& stat1, const std::string& stat2,
                             const EnumLimits& limits) {
    JointTable table = joint_table_by_composition(m, alpha, stat1, stat2, limits);
    std::string context = std::to_string(m) + "x alpha(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) context += ',';
        context += std::to_string(alpha[i]);
    }
    context += ") (" + stat1 + "," + stat2 + ")";
    return symmetry_of(table, m >= alpha_sum(alpha), context);
}

VerifyReport verify_hankel(const GridShape& shape, const EnumLimits& limits) {
    VerifyReport report;
    if (shape.n < 1 || shape.m / shape.n < 2) {
        report.applicable = false;
        report.pass = true;
        report.detail = std::to_string(shape.m) + "x" + std::to_string(shape.n) +
                        ": not applicable (floor(m/n) < 2)";
        return report;
    }
    JointTable table = joint_table(shape, "run", "ret", limits);
    report.applicable = true;
    report.pass = true;
    const int n = shape.n;
    for (int i = 0; i + 1 < n && report.pass; ++i) {
        for (int j = 1; j < n; ++j) {
            if (table.matrix[i][j] != table.matrix[i + 1][j - 1]) {
                report.pass = false;
                report.detail = std::to_string(shape.m) + "x" + std::to_string(n) +
                                ": entries (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") and (" +
                                std::to_string(i + 2) + "," + std::to_string(j) +
                                ") differ";
                break;
            }
        }
    }
    if (report.pass)
        report.detail = std::to_string(shape.m) + "x" + std::to_string(shape.n) +
                        ": skew-diagonals constant";
    return report;
}

}  // namespace ratpath
