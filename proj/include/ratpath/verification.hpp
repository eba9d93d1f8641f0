#pragma once

// Verification suites: exhaustive sweeps of the symmetry, involution,
// Hankel, series and T-set results over bounded shape ranges.  Each check
// produces one named line so failures stay attributable; a suite passes
// when every line that was not skipped passes.

#include <cstdint>
#include <string>
#include <vector>

#include "ratpath/enumeration.hpp"

namespace ratpath {

struct CheckLine {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> lines;

    bool pass() const;
    int failures() const;
};

struct SuiteBounds {
    int max_m = 8;             // wide-shape sweeps run over 1 <= n < m <= max_m
    int max_square = 6;        // square sweeps run over n = m <= max_square
    int hankel_m = 10;         // m bound for the Hankel sweep
    int series_n = 5;          // truncation order for series-vs-enumeration
    int tset_n = 5;            // composition size bound for the T-set identity
    int tset_m = 10;           // m bound for the T-set identity
    std::uint64_t seed = 12345;
};

SuiteReport suite_symmetry(const SuiteBounds& bounds = {});
SuiteReport suite_involution(const SuiteBounds& bounds = {});
SuiteReport suite_hankel(const SuiteBounds& bounds = {});
SuiteReport suite_series_vs_enum(const SuiteBounds& bounds = {});
SuiteReport suite_t_identity(const SuiteBounds& bounds = {});

// Single-shape variants behind `verify --m --n`.
SuiteReport suite_symmetry_single(const GridShape& shape);
SuiteReport suite_hankel_single(const GridShape& shape);

// name is one suite name or "all".
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteBounds& bounds = {});

}  // namespace ratpath
