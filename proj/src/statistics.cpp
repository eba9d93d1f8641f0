#include "ratpath/statistics.hpp"

#include <algorithm>
#include <numeric>

namespace ratpath {

namespace {

void require_wide(const DyckPath& path, const char* who) {
    if (path.m() < path.n())
        throw Error(Errc::ShapeUnsupported,
                    std::string(who) + " needs m >= n (open problem for m < n)");
}

void require_strictly_wide(const DyckPath& path, const char* who) {
    if (path.m() <= path.n())
        throw Error(Errc::ShapeUnsupported, std::string(who) + " needs m > n");
}

// Height of the path after each east step: ys[c] for c in 1..m, ys[0] = 0.
std::vector<int> heights_by_column(const DyckPath& path) {
    std::vector<int> ys;
    ys.reserve(path.m() + 1);
    ys.push_back(0);
    int y = 0;
    for (char c : path.steps()) {
        if (c == 'N') ++y; else ys.push_back(y);
    }
    return ys;
}

}  // namespace

int ret(const DyckPath& path) {
    // Count maximal blocks of north steps running along diagonal cells.  For
    // m >= n a rank < n point is never followed by another one, so every block
    // is a single step and this equals the number of return positions.
    const auto pts = path.lattice_points();
    const auto& shape = path.shape();
    auto is_return = [&](std::size_t idx) {
        const Point& p = pts[idx];
        if (p.x == shape.m && p.y == shape.n) return false;
        return rank(shape, p.x, p.y) < shape.n;
    };
    int blocks = 0;
    for (std::size_t idx = 0; idx < pts.size(); ++idx)
        if (is_return(idx) && (idx == 0 || !is_return(idx - 1))) ++blocks;
    return blocks;
}

int run(const DyckPath& path) {
    const int n = path.n();
    if (n == 0) return 0;
    std::vector<char> seen(n + 1, 0);
    for (int u : coarea_sequence(path))
        if (u <= n) seen[u] = 1;
    for (int i = 1; i <= n; ++i)
        if (!seen[i]) return i;
    throw Error(Errc::InternalInvariant, "coarea multiset covers all of [n]");
}

int ratio_run(const DyckPath& path) {
    require_wide(path, "ratio_run");
    const int n = path.n();
    if (n == 0) return 0;
    const int k = path.m() / n;
    std::vector<char> seen(path.m(), 0);
    for (int u : coarea_sequence(path)) seen[u] = 1;
    for (int i = 1; i <= n; ++i) {
        long long v = static_cast<long long>(k) * i;
        if (v >= path.m() || !seen[v]) return i;
    }
    throw Error(Errc::InternalInvariant, "every multiple of k occurs in the coarea");
}

int inor(const DyckPath& path) {
    int count = 0;
    for (char c : path.steps()) {
        if (c != 'N') break;
        ++count;
    }
    return count;
}

int nc(const DyckPath& path) {
    if (path.n() == 0) return 0;
    return static_cast<int>(composition_type(path).size());
}

long long coarea_total(const DyckPath& path) {
    long long total = 0;
    for (int u : coarea_sequence(path)) total += u;
    return total;
}

long long cells_above_diagonal(const GridShape& shape) {
    if (shape.n == 0) return 0;
    long long total = 0;
    for (int j = 1; j <= shape.n; ++j)
        total += static_cast<long long>(shape.m) * (j - 1) / shape.n;
    return total;
}

long long area(const DyckPath& path) {
    return cells_above_diagonal(path.shape()) - coarea_total(path);
}

int rr_direct(const DyckPath& path) {
    require_strictly_wide(path, "rr_direct");
    if (path.n() == 0) return 0;
    const Composition alpha = composition_type(path);
    // Endpoint ranks of the vertical components increase strictly (m > n),
    // so the initial stretch with rank < n is a prefix.
    long long y = 0;
    int below = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        y += alpha[j];
        if (rank(path.shape(), static_cast<long long>(j) + 1, y) >= path.n()) break;
        ++below;
    }
    return below + 1;
}

int rr_formula(const Composition& alpha, int m) {
    long long n = 0;
    for (int part : alpha) {
        if (part < 1)
            throw Error(Errc::BadArgument, "composition parts must be positive");
        n += part;
    }
    if (m <= n)
        throw Error(Errc::ShapeUnsupported, "rr_formula needs m > |alpha|");
    if (n == 0) return 0;
    int iones = 0;
    for (int part : alpha) {
        if (part != 1) break;
        ++iones;
    }
    long long ceil_term = (m - 1) / (m - n);  // ceil(n / (m - n))
    return static_cast<int>(std::min<long long>(iones + 1, ceil_term));
}

Signature full_signature(const DyckPath& path) {
    Signature sig;
    sig.reserve(path.m());
    char prev = 'E';
    for (char c : path.steps()) {
        if (c == 'E') sig += (prev == 'N') ? '1' : '0';
        prev = c;
    }
    return sig;
}

Signature plain_signature(const DyckPath& path) {
    require_strictly_wide(path, "plain_signature");
    const int n = path.n();
    const Signature full = full_signature(path);
    if (n == 0) return full;  // no components, nothing to delete

    const int r = run(path);
    const GridShape shape = path.shape();
    Signature plain;
    long long x = 0, y = 0;
    int comp = 0;            // index of the component being read, 1-based
    bool comp_is_return = false;
    bool in_norths = false;
    int column = 0;
    int returns_seen = 0;
    for (char c : path.steps()) {
        if (c == 'N') {
            if (!in_norths) {
                ++comp;
                comp_is_return = rank(shape, x, y) < n;
                if (comp_is_return) ++returns_seen;
                in_norths = true;
            }
            ++y;
        } else {
            ++column;
            bool closes_component = in_norths;
            bool drop;
            if (closes_component)
                drop = (comp <= r) || comp_is_return;
            else
                drop = (column == r + 1);
            if (!drop) plain += full[column - 1];
            in_norths = false;
            ++x;
        }
    }
    // r run components, the forced east, and the returns outside the first
    // rr components are deleted; anything else would be a logic error.
    const int rr = rr_direct(path);
    const int expected =
        path.m() - r - (returns_seen - rr) - 1;
    if (static_cast<int>(plain.size()) != expected)
        throw Error(Errc::InternalInvariant, "plain signature length mismatch");
    return plain;
}

int rr_tilde(const DyckPath& path) {
    require_strictly_wide(path, "rr_tilde");
    const int n = path.n();
    if (n == 0) return 0;
    const int k = path.m() / n;
    const std::vector<int> ys = heights_by_column(path);
    int blocks = 0;
    for (int j = 1; static_cast<long long>(j) * k <= path.m(); ++j) {
        const int x = j * k;
        const int y = ys[x];
        if (x == path.m() && y == path.n()) break;
        if (rank(path.shape(), x, y) >= n) break;
        ++blocks;
    }
    return blocks + 1;
}

RatioSplit ratio_split(const DyckPath& path) {
    require_strictly_wide(path, "ratio_split");
    const int n = path.n();
    if (n == 0)
        throw Error(Errc::EmptyPath, "ratio_split needs at least one north step");
    const int m = path.m();
    const int k = m / n;
    const int a = ratio_run(path);
    const Signature full = full_signature(path);
    const std::vector<int> ys = heights_by_column(path);

    RatioSplit split;
    std::vector<char> collected(m + 1, 0);
    for (int i = 0; i < a; ++i) {
        std::vector<int> block;
        block.reserve(k);
        for (int c = i * k + 1; c <= (i + 1) * k; ++c) {
            block.push_back(c);
            collected[c] = 1;
        }
        split.block_columns.push_back(std::move(block));
    }
    // When the ratio-runs span every column (the staircase with n | m) there
    // is no forced east and nothing left to scan.
    const int forced = a * k + 1;
    if (forced <= m && ys[forced] != ys[forced - 1])
        throw Error(Errc::InternalInvariant, "missing forced east after the ratio-runs");

    int cursor = forced + 1;
    while (cursor <= m) {
        if (rank(path.shape(), cursor - 1, ys[cursor - 1]) < n) {
            if (cursor + k - 1 > m)
                throw Error(Errc::InternalInvariant, "return block overruns the grid");
            std::vector<int> block;
            block.reserve(k);
            for (int c = cursor; c <= cursor + k - 1; ++c) {
                block.push_back(c);
                collected[c] = 1;
            }
            split.block_columns.push_back(std::move(block));
            cursor += k;
        } else {
            ++cursor;
        }
    }

    for (const auto& block : split.block_columns)
        for (int c : block) split.sign1 += full[c - 1];
    for (int c = 1; c <= m; ++c) {
        if (collected[c] || c == forced) continue;
        split.sign2 += full[c - 1];
    }
    // P1/P2 are the subsequences of the step string; the norths ahead of an
    // east travel with that east's column.
    for (int c = 1; c <= m; ++c) {
        if (c == forced) continue;
        std::string& target = collected[c] ? split.p1_steps : split.p2_steps;
        target.append(ys[c] - ys[c - 1], 'N');
        target += 'E';
    }
    return split;
}

StatReport stat_report(const DyckPath& path) {
    StatReport report;
    report.ret = ret(path);
    report.run = run(path);
    report.inor = inor(path);
    report.nc = nc(path);
    report.coarea_total = coarea_total(path);
    if (path.m() >= path.n() && path.n() >= 1)
        report.ratio_run = ratio_run(path);
    if (path.m() > path.n() && path.n() >= 1) {
        report.rr = rr_direct(path);
        report.rr_tilde = rr_tilde(path);
    }
    return report;
}

}  // namespace ratpath
