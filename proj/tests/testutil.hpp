#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ratpath/enumeration.hpp"
#include "ratpath/path.hpp"

// Independent reference implementations.  They recompute statistics and
// counts straight from the definitions so that the library code under test
// shares no logic with them.
namespace testutil {

using ratpath::BigInt;
using ratpath::Composition;
using ratpath::DyckPath;
using ratpath::GridShape;

// run = smallest i in [n] missing from the coarea multiset.
inline int oracle_run(const DyckPath& path) {
    const auto u = ratpath::coarea_sequence(path);
    std::vector<char> seen(path.n() + 2, 0);
    for (const int value : u)
        if (value <= path.n()) seen[value] = 1;
    for (int i = 1; i <= path.n(); ++i)
        if (!seen[i]) return i;
    return path.n();
}

// ret = number of maximal blocks of path points with rank below n, walking
// the lattice points directly.
inline int oracle_ret(const DyckPath& path) {
    const auto pts = path.lattice_points();
    const long long m = path.m();
    const long long n = path.n();
    int blocks = 0;
    bool inside = false;
    for (const auto& p : pts) {
        const bool low = (p.y * m - p.x * n < n) && !(p.x == m && p.y == n);
        if (low && !inside) ++blocks;
        inside = low;
    }
    return blocks;
}

// area = cells weakly below the path and strictly above the diagonal.
inline long long oracle_area(const DyckPath& path) {
    const auto u = ratpath::coarea_sequence(path);
    const long long m = path.m();
    const long long n = path.n();
    long long cells = 0;
    for (long long y = 0; y < n; ++y)
        for (long long x = 0; x < m; ++x)
            if (m * y - n * x - n >= 0 && x >= u[static_cast<std::size_t>(y)]) ++cells;
    return cells;
}

inline BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

// Grid DP over lattice points with the rank constraint.
inline BigInt oracle_count(const GridShape& shape) {
    const long long m = shape.m;
    const long long n = shape.n;
    std::vector<std::vector<BigInt>> grid(m + 1, std::vector<BigInt>(n + 1, 0));
    grid[0][0] = 1;
    for (long long x = 0; x <= m; ++x)
        for (long long y = 0; y <= n; ++y) {
            if (y * m - x * n < 0) continue;
            if (x > 0) grid[x][y] += grid[x - 1][y];
            if (y > 0) grid[x][y] += grid[x][y - 1];
        }
    return grid[m][n];
}

inline std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) return out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
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
        out.push_back(alpha);
    }
    return out;
}

// Brute-force size of the suffix set: arrangements of the remaining steps
// from (j+1, a_1+...+a_j) to (m,n) whose maximal north runs spell the tail of
// alpha and whose interior points all sit at rank >= n.
inline BigInt oracle_t_count(int m, const Composition& alpha, int j) {
    const int len = static_cast<int>(alpha.size());
    long long n = 0;
    for (const int part : alpha) n += part;
    long long start_y = 0;
    for (int i = 0; i < j; ++i) start_y += alpha[i];
    const long long x0 = j + 1;
    const Composition tail(alpha.begin() + j, alpha.end());
    const long long easts = m - x0;
    const long long norths = n - start_y;
    if (easts < 0 || norths < 0) return 0;
    if (!(x0 == m && start_y == n) && start_y * m - x0 * n < n) return 0;

    std::string s = std::string(easts, 'E') + std::string(norths, 'N');
    BigInt total = 0;
    do {
        long long x = x0;
        long long y = start_y;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < s.size() && ok; ++i) {
            if (s[i] == 'N') ++y; else ++x;
            if (y * m - x * n < n) ok = false;
        }
        if (!ok) continue;
        Composition runs;
        int current = 0;
        for (const char c : s) {
            if (c == 'N') {
                ++current;
            } else {
                if (current > 0) runs.push_back(current);
                current = 0;
            }
        }
        if (current > 0) continue;
        if (runs == tail) total += 1;
    } while (std::next_permutation(s.begin(), s.end()));
    return total;
}

}  // namespace testutil
