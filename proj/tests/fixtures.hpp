#pragma once

#include <string>
#include <vector>

#include "ratpath/path.hpp"

// Worked examples used across the test binaries.  Every value here was
// computed by hand from the definitions before being frozen.
namespace fixtures {

// 7x5: coarea (0,0,1,1,3), composition (2,2,1).
inline const char* kPath7x5 = "NNENNEENEEEE";

// 15x7: the running example with one return away from the origin.
inline const char* kPath15x7 = "NENENNENEEEEEEENNEEEEE";

// 15x11: hit-and-lift input with composition (1,2,3,2,1,2), run 4, ret 2.
inline const char* kHitLiftInput15x11 = "NENNENNNENNEEEEENENNEEEEEE";
inline const char* kHitLiftImageFullSig = "110010011000100";
inline const std::vector<int> kHitLiftExtraColumns = {5, 13};

// 23x11 (k = 2): one block lift sends the first path to the second.
inline const char* kBlockLeft23x11 = "NENENNENEEEENEEEEENENENENEEEEENEEE";
inline const char* kBlockRight23x11 = "NENEEENNENEENEEEEENENENENEEEEENEEE";
inline const char* kBlockSign1 = "11111110";
inline const char* kBlockSign2 = "00100001100000";
inline const char* kBlockP1 = "NENENNENENENENEE";
inline const char* kBlockP2 = "EENEEEEENENEEEEEE";
inline const std::vector<std::vector<int>> kBlockColumns = {{1, 2}, {3, 4}, {13, 14}, {21, 22}};
inline const std::vector<int> kBlockRightReturnColumns = {1, 5, 13, 21};

// 13x5: a pair swapped by the run/return involution.
inline const char* kPhiPairA = "NENENEEEEENEENEEEE";  // run 3, ret 2
inline const char* kPhiPairB = "NENEEEENEENEENEEEE";  // run 2, ret 3

// 4x6: the wide-side witness; run 3, ret 2, while class (2,3) holds exactly
// one path, NNENNNEENE.
inline const char* kWitness4x6 = "NNNENENNEE";
inline const char* kOther4x6 = "NNENNNEENE";

// Joint (run, ret) tables.
inline const std::vector<std::vector<long long>> kTable12x4 = {
    {52, 30, 8, 1},
    {30, 8, 1, 0},
    {8, 1, 0, 0},
    {1, 0, 0, 0},
};
inline const std::vector<std::vector<long long>> kTable13x5 = {
    {106, 106, 39, 9, 1},
    {106, 39, 9, 1, 0},
    {39, 9, 1, 0, 0},
    {9, 1, 0, 0, 0},
    {1, 0, 0, 0, 0},
};

inline ratpath::DyckPath path7x5() { return ratpath::parse_path(kPath7x5, {7, 5}); }
inline ratpath::DyckPath path15x7() { return ratpath::parse_path(kPath15x7, {15, 7}); }
inline ratpath::DyckPath hitlift_input() { return ratpath::parse_path(kHitLiftInput15x11, {15, 11}); }
inline ratpath::DyckPath block_left() { return ratpath::parse_path(kBlockLeft23x11, {23, 11}); }
inline ratpath::DyckPath block_right() { return ratpath::parse_path(kBlockRight23x11, {23, 11}); }

}  // namespace fixtures
