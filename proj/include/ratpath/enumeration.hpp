#pragma once

#include "ratpath/path.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ratpath {

using BigInt = boost::multiprecision::cpp_int;

// Exhaustive generation and exact counting.
//
// Generation is a depth-first scan trying N before E, so paths stream in
// lexicographic step-string order (N < E) and reruns are reproducible.  The
// recursion never dead-ends: any prefix above the diagonal extends by
// climbing the remaining norths first.  Counting is a separate lattice DP so
// the two can cross-check each other.

struct EnumLimits {
    BigInt cap = 100000000;            // refuse larger enumerations...
    bool force = false;                // ...unless forced
    BigInt parallel_threshold = 1000000;
    int threads = 0;                   // 0 = hardware concurrency
};

struct JointTable {
    GridShape shape;
    std::pair<std::string, std::string> stat_pair;
    std::vector<std::vector<BigInt>> matrix;  // entry [k-1][l-1] = #paths with
                                              // stat1 = k, stat2 = l
};

struct VerifyReport {
    bool applicable = true;
    bool pass = false;
    std::string detail;
};

void for_each_path(const GridShape& shape,
                   const std::function<void(const DyckPath&)>& visit);
void for_each_path(int m, const Composition& alpha,
                   const std::function<void(const DyckPath&)>& visit);

std::vector<DyckPath> all_paths(const GridShape& shape, const EnumLimits& limits = {});
std::vector<DyckPath> all_paths(int m, const Composition& alpha,
                                const EnumLimits& limits = {});

BigInt count_paths(const GridShape& shape);

// Joint distribution of two statistics drawn from {run, ret, ratio_run, inor};
// ratio_run needs m >= n, the others work on every shape.  Large shapes are
// sharded over threads by step-string prefixes; results are merged in shard
// order so the table does not depend on scheduling.
JointTable joint_table(const GridShape& shape, const std::string& stat1,
                       const std::string& stat2, const EnumLimits& limits = {});
JointTable joint_table_by_composition(int m, const Composition& alpha,
                                      const std::string& stat1,
                                      const std::string& stat2,
                                      const EnumLimits& limits = {});

// Lattice paths from (j+1, alpha_1+...+alpha_j) to (m, n) with composition
// type (alpha_{j+1},...,alpha_l) whose non-final points all have rank >= n.
// These are the valid suffixes after the forced east of a path with j run
// components and minimal returns, so their count is |D^(k,l)_{m,alpha}| for
// j = k + l - rr(alpha, m) and their east signatures are the valid plain
// signatures of that class.
BigInt count_T(int m, const Composition& alpha, int j);
std::set<Signature> enumerate_T_signatures(int m, const Composition& alpha, int j);

// Table symmetry (transpose equality).  Shapes with m < n are reported as
// not applicable: the symmetry is an open problem there and genuinely fails.
VerifyReport verify_symmetry(const GridShape& shape,
                             const std::string& stat1 = "run",
                             const std::string& stat2 = "ret",
                             const EnumLimits& limits = {});
VerifyReport verify_symmetry(int m, const Composition& alpha,
                             const std::string& stat1 = "run",
                             const std::string& stat2 = "ret",
                             const EnumLimits& limits = {});

// Constant skew-diagonals of the (run, ret) table; applicable when
// floor(m/n) >= 2.
VerifyReport verify_hankel(const GridShape& shape, const EnumLimits& limits = {});

}  // namespace ratpath
