#include "ratpath/path.hpp"

#include <algorithm>
#include <functional>

namespace ratpath {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::BadArgument: return "BadArgument";
        case Errc::BadCharacter: return "BadCharacter";
        case Errc::WrongStepCount: return "WrongStepCount";
        case Errc::BelowDiagonal: return "BelowDiagonal";
        case Errc::NotWeaklyIncreasing: return "NotWeaklyIncreasing";
        case Errc::OnesCountMismatch: return "OnesCountMismatch";
        case Errc::ShapeUnsupported: return "ShapeUnsupported";
        case Errc::EmptyPath: return "EmptyPath";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::InternalInvariant: return "InternalInvariant";
        case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::Mismatch: return "Mismatch";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

long long rank(const GridShape& shape, long long i, long long j) {
    return j * shape.m - i * shape.n;
}

static void check_shape(const GridShape& shape) {
    if (shape.m < 1 || shape.n < 0)
        throw Error(Errc::BadArgument, "grid shape must have m >= 1, n >= 0");
}

DyckPath::DyckPath(GridShape shape, std::string steps)
    : shape_(shape), steps_(std::move(steps)) {
    check_shape(shape_);
    for (char c : steps_)
        if (c != 'N' && c != 'E')
            throw Error(Errc::BadCharacter,
                        std::string("step character '") + c + "' (want N or E)");
    int norths = static_cast<int>(std::count(steps_.begin(), steps_.end(), 'N'));
    int easts = static_cast<int>(steps_.size()) - norths;
    if (easts != shape_.m || norths != shape_.n)
        throw Error(Errc::WrongStepCount,
                    "path has " + std::to_string(easts) + " E and " +
                        std::to_string(norths) + " N steps; shape wants " +
                        std::to_string(shape_.m) + " E and " +
                        std::to_string(shape_.n) + " N");
    long long i = 0, j = 0;
    for (char c : steps_) {
        if (c == 'N') ++j; else ++i;
        if (rank(shape_, i, j) < 0)
            throw Error(Errc::BelowDiagonal,
                        "path dips below the diagonal at (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
    }
}

std::vector<Point> DyckPath::lattice_points() const {
    std::vector<Point> pts;
    pts.reserve(steps_.size() + 1);
    Point p{0, 0};
    pts.push_back(p);
    for (char c : steps_) {
        if (c == 'N') ++p.y; else ++p.x;
        pts.push_back(p);
    }
    return pts;
}

DyckPath parse_path(const std::string& text, const GridShape& shape) {
    return DyckPath(shape, text);
}

std::vector<Point> return_positions(const DyckPath& path) {
    std::vector<Point> out;
    const auto pts = path.lattice_points();
    const auto& shape = path.shape();
    for (std::size_t idx = 0; idx < pts.size(); ++idx) {
        const Point& p = pts[idx];
        if (p.x == shape.m && p.y == shape.n) continue;
        if (rank(shape, p.x, p.y) < shape.n) {
            // A rank < n point that is not the endpoint cannot afford an east
            // step, so the path must leave it northward.
            if (idx < path.steps().size() && path.steps()[idx] != 'N')
                throw Error(Errc::InternalInvariant,
                            "return position not followed by a north step");
            out.push_back(p);
        }
    }
    return out;
}

CoareaSeq coarea_sequence(const DyckPath& path) {
    CoareaSeq u;
    u.reserve(path.n());
    int x = 0;
    for (char c : path.steps()) {
        if (c == 'N') u.push_back(x); else ++x;
    }
    return u;
}

DyckPath from_coarea(const CoareaSeq& u, const GridShape& shape) {
    check_shape(shape);
    if (static_cast<int>(u.size()) != shape.n)
        throw Error(Errc::WrongStepCount,
                    "coarea sequence has " + std::to_string(u.size()) +
                        " entries; shape wants " + std::to_string(shape.n));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] > shape.m - 1)
            throw Error(Errc::BadArgument,
                        "coarea entry " + std::to_string(u[i]) + " out of range");
        if (i > 0 && u[i] < u[i - 1])
            throw Error(Errc::NotWeaklyIncreasing,
                        "coarea sequence must be weakly increasing");
    }
    std::string steps;
    steps.reserve(shape.m + shape.n);
    int x = 0;
    for (int ui : u) {
        while (x < ui) { steps += 'E'; ++x; }
        steps += 'N';
    }
    while (x < shape.m) { steps += 'E'; ++x; }
    return DyckPath(shape, std::move(steps));  // ctor re-checks the diagonal
}

Composition composition_type(const DyckPath& path) {
    if (path.n() == 0)
        throw Error(Errc::EmptyPath, "composition type needs at least one north step");
    Composition alpha;
    int run = 0;
    for (char c : path.steps()) {
        if (c == 'N') {
            ++run;
        } else if (run > 0) {
            alpha.push_back(run);
            run = 0;
        }
    }
    if (run > 0) alpha.push_back(run);
    return alpha;
}

Composition partition_type(const DyckPath& path) {
    Composition lambda = composition_type(path);
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    return lambda;
}

DyckPath from_comp_signature(const Composition& alpha, const Signature& fullsig,
                             const GridShape& shape) {
    check_shape(shape);
    for (char c : fullsig)
        if (c != '0' && c != '1')
            throw Error(Errc::BadCharacter,
                        std::string("signature character '") + c + "' (want 0 or 1)");
    if (static_cast<int>(fullsig.size()) != shape.m)
        throw Error(Errc::WrongStepCount,
                    "signature has " + std::to_string(fullsig.size()) +
                        " bits; shape wants " + std::to_string(shape.m));
    int ones = static_cast<int>(std::count(fullsig.begin(), fullsig.end(), '1'));
    if (ones != static_cast<int>(alpha.size()))
        throw Error(Errc::OnesCountMismatch,
                    "signature has " + std::to_string(ones) + " ones but the " +
                        "composition has " + std::to_string(alpha.size()) + " parts");
    int total = 0;
    for (int part : alpha) {
        if (part < 1)
            throw Error(Errc::BadArgument, "composition parts must be positive");
        total += part;
    }
    if (total != shape.n)
        throw Error(Errc::WrongStepCount,
                    "composition sums to " + std::to_string(total) +
                        "; shape wants " + std::to_string(shape.n));
    std::string steps;
    steps.reserve(shape.m + shape.n);
    std::size_t next = 0;
    for (char bit : fullsig) {
        if (bit == '1') steps.append(alpha[next++], 'N');
        steps += 'E';
    }
    return DyckPath(shape, std::move(steps));
}

DyckPath embed_square(const DyckPath& path) {
    if (path.m() != path.n())
        throw Error(Errc::ShapeUnsupported, "embed_square wants a square path");
    GridShape wide{path.m() + 1, path.n()};
    return DyckPath(wide, path.steps() + "E");
}

}  // namespace ratpath
