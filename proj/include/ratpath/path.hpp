#pragma once
// Rational Dyck paths on an m x n grid: words over {N, E} from (0,0) to (m,n)
// that stay weakly above the diagonal y = (n/m) x, together with the standard
// encodings (coarea sequence, composition type, east-step signature).
//
// The canonical representation is the step string, e.g. "NNENNEENEEEE".
// All conversions validate their input and throw ratpath::Error on misuse.

#include <stdexcept>
#include <string>
#include <vector>

namespace ratpath {

enum class Errc {
    BadArgument,
    BadCharacter,
    WrongStepCount,
    BelowDiagonal,
    NotWeaklyIncreasing,
    OnesCountMismatch,
    ShapeUnsupported,
    EmptyPath,
    PreconditionViolated,
    InternalInvariant,
    NonUnitConstantTerm,
    CapExceeded,
    Mismatch,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Grid with m east steps and n north steps; m >= 1, n >= 0.  n = 0 is the
// degenerate all-east row, kept valid so that every statistic has a base case.
struct GridShape {
    int m = 1;
    int n = 0;
    friend bool operator==(const GridShape&, const GridShape&) = default;
};

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

// rank(i,j) = j*m - i*n.  Nonnegative exactly on or above the diagonal; a
// lattice path is a Dyck path iff every point it visits has rank >= 0.
long long rank(const GridShape& shape, long long i, long long j);

using Composition = std::vector<int>;  // positive parts, sums to n
using CoareaSeq = std::vector<int>;    // weakly increasing, values in [0, m-1]
using Signature = std::string;         // one '0'/'1' character per east step

class DyckPath {
public:
    // Validates character set, step counts, and the diagonal condition.
    DyckPath(GridShape shape, std::string steps);

    const GridShape& shape() const { return shape_; }
    int m() const { return shape_.m; }
    int n() const { return shape_.n; }
    const std::string& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }

    // All m+n+1 lattice points visited, from (0,0) to (m,n).
    std::vector<Point> lattice_points() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend bool operator<(const DyckPath& a, const DyckPath& b) {
        return a.steps_ < b.steps_;
    }

private:
    GridShape shape_;
    std::string steps_;
};

DyckPath parse_path(const std::string& text, const GridShape& shape);

// Path points other than (m,n) with rank < n.  Validity forces each of them
// to be followed by a north step, so they mark the norths that touch the
// diagonal cells; their count is the ret statistic.
std::vector<Point> return_positions(const DyckPath& path);

// u_i = x-coordinate of the i-th north step, bottom to top.
CoareaSeq coarea_sequence(const DyckPath& path);
DyckPath from_coarea(const CoareaSeq& u, const GridShape& shape);

// Lengths of the maximal north runs, in path order.  Requires n >= 1.
Composition composition_type(const DyckPath& path);
// Same parts sorted weakly decreasing.
Composition partition_type(const DyckPath& path);

// Rebuild a path from its composition type and full signature: scanning the
// signature, a '1' emits the next north run followed by its east step, a '0'
// emits a bare east step.  Inverse of (composition_type, full_signature).
DyckPath from_comp_signature(const Composition& alpha, const Signature& fullsig,
                             const GridShape& shape);

// Append one east step to an n x n path, giving an (n+1) x n path.  Preserves
// run and ret; used to route square paths through the rectangular bijections.
DyckPath embed_square(const DyckPath& path);

}  // namespace ratpath
