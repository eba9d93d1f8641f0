#pragma once

#include "ratpath/path.hpp"

#include <string>
#include <vector>

namespace ratpath {

// Path statistics.
//
// A valid m x n path determines a coarea sequence U = (u_1,...,u_n) and a
// composition type alpha.  The statistics below are all derived from those
// two objects plus the rank function:
//
//   ret        number of return positions (points of rank < n, endpoint
//              excluded); each such point is followed by a north step
//   run        smallest i in [n] missing from the coarea multiset; equals
//              the number of peaks before the first EE factor
//   ratio_run  smallest i in [n] with k*i missing from the coarea multiset,
//              where k = floor(m/n)
//   inor       length of the initial north segment
//   nc         number of vertical components, i.e. parts of alpha
//   rr         number of initial vertical components that contribute to both
//              run and ret; depends only on (alpha, m)
//   rr_tilde   block analogue of rr for the ratio statistics; counts the
//              initial k-column blocks that end at a return position, plus 1
//
// Signatures mark each east step with 1 when it follows a north step.  The
// plain signature keeps only the bits that survive deleting run components,
// return components and the forced east after the last run component.

struct StatReport {
    int ret = 0;
    int run = 0;
    int ratio_run = 0;
    int inor = 0;
    int nc = 0;
    int rr = 0;
    int rr_tilde = 0;
    long long coarea_total = 0;
};

// Outcome of splitting a path into its ratio-run/return blocks (P1) and the
// leftover columns (P2).  The forced east after the last ratio-run belongs to
// neither part.  block_columns lists, per block, the k columns it occupies.
struct RatioSplit {
    std::string p1_steps;
    std::string p2_steps;
    Signature sign1;
    Signature sign2;
    std::vector<std::vector<int>> block_columns;
};

int ret(const DyckPath& path);
int run(const DyckPath& path);
int ratio_run(const DyckPath& path);
int inor(const DyckPath& path);
int nc(const DyckPath& path);

long long coarea_total(const DyckPath& path);
long long area(const DyckPath& path);
// Cells whose interior lies fully above the main diagonal; area + coarea is
// this constant for every path of the shape.
long long cells_above_diagonal(const GridShape& shape);

int rr_direct(const DyckPath& path);
int rr_formula(const Composition& alpha, int m);

Signature full_signature(const DyckPath& path);
Signature plain_signature(const DyckPath& path);

int rr_tilde(const DyckPath& path);
RatioSplit ratio_split(const DyckPath& path);

// Bundles every statistic; entries whose defining shape condition fails
// (ratio_run for m < n, rr and rr_tilde for m <= n) are reported as 0.
StatReport stat_report(const DyckPath& path);

}  // namespace ratpath
