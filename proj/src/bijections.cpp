#include "ratpath/bijections.hpp"

#include <string>

namespace ratpath {

namespace {

struct Rebuild {
    std::string steps;
    std::vector<int> lift_columns;
};

// Shared construction state: appends are checked against the diagonal as we
// go, so a broken invariant surfaces at the exact offending step.
struct Builder {
    GridShape shape;
    const Composition& alpha;
    std::string steps;
    long long x = 0, y = 0;
    std::size_t next_part = 0;

    explicit Builder(GridShape s, const Composition& a) : shape(s), alpha(a) {}

    void check() const {
        if (rank(shape, x, y) < 0)
            throw Error(Errc::InternalInvariant, "rebuild crossed the diagonal");
        if (x > shape.m || y > shape.n)
            throw Error(Errc::InternalInvariant, "rebuild overran the grid");
    }
    void east() {
        steps += 'E';
        ++x;
        check();
    }
    void component() {
        if (next_part >= alpha.size())
            throw Error(Errc::InternalInvariant, "rebuild ran out of components");
        steps.append(alpha[next_part], 'N');
        y += alpha[next_part];
        ++next_part;
        east();
    }
    bool at_return() const {
        if (x == shape.m && y == shape.n) return false;
        return rank(shape, x, y) < shape.n;
    }
};

// Core sweep shared by the linear and the block map.  The prefix has already
// been laid down by the caller; `emit_unit` consumes one signature unit (a
// bit, or a k-column block) and `lift_unit` appends one unit without
// consuming.  Runs until the path has all m east steps.
template <typename HasBits, typename EmitUnit, typename LiftUnit>
void sweep(Builder& b, std::vector<int>& lifts, HasBits has_bits,
           EmitUnit emit_unit, LiftUnit lift_unit) {
    while (b.x < b.shape.m) {
        if (b.at_return()) {
            lifts.push_back(static_cast<int>(b.x) + 1);
            lift_unit();
        } else if (has_bits()) {
            emit_unit();
        } else {
            throw Error(Errc::InternalInvariant,
                        "signature exhausted before the path was complete");
        }
    }
}

// Rebuilds the unique member of D_{m,alpha} with the given plain signature
// and `target` run components.
Rebuild rebuild_linear(const Composition& alpha, const Signature& plain,
                       GridShape shape, int target) {
    Builder b(shape, alpha);
    for (int i = 0; i < target; ++i) b.component();
    b.east();  // forced east after the run components
    std::size_t i = 0;
    Rebuild out;
    sweep(
        b, out.lift_columns, [&] { return i < plain.size(); },
        [&] {
            if (plain[i++] == '1') b.component(); else b.east();
        },
        [&] { b.component(); });
    if (b.y != shape.n || b.next_part != alpha.size() || i != plain.size())
        throw Error(Errc::InternalInvariant, "rebuild left unused components or bits");
    out.steps = std::move(b.steps);
    return out;
}

// Block analogue: prefix and lifted units are k-column blocks whose internal
// layout is dictated by sign1 (a 1-bit column carries the next component, a
// 0-bit column is a bare east); the sweep consumes sign2 one column at a time.
Rebuild rebuild_blocks(const Composition& alpha, int k, const Signature& sign1,
                       const Signature& sign2, GridShape shape, int target) {
    Builder b(shape, alpha);
    std::size_t pos1 = 0;
    auto block = [&] {
        if (pos1 + k > sign1.size())
            throw Error(Errc::InternalInvariant, "sign1 exhausted mid-block");
        for (int c = 0; c < k; ++c) {
            if (sign1[pos1++] == '1') b.component(); else b.east();
        }
    };
    for (int i = 0; i < target; ++i) block();
    b.east();  // forced east after the ratio-runs
    std::size_t pos2 = 0;
    Rebuild out;
    sweep(
        b, out.lift_columns, [&] { return pos2 < sign2.size(); },
        [&] {
            if (sign2[pos2++] == '1') b.component(); else b.east();
        },
        block);
    if (b.y != shape.n || b.next_part != alpha.size() || pos1 != sign1.size() ||
        pos2 != sign2.size())
        throw Error(Errc::InternalInvariant, "block rebuild left unused material");
    out.steps = std::move(b.steps);
    return out;
}

DyckPath strip_embedding(const DyckPath& wide, GridShape square) {
    const std::string& steps = wide.steps();
    if (steps.empty() || steps.back() != 'E')
        throw Error(Errc::InternalInvariant, "embedded image does not end in E");
    return DyckPath(square, steps.substr(0, steps.size() - 1));
}

}  // namespace

HitLiftTrace hit_and_lift(const HitLiftRequest& req) {
    const DyckPath& path = req.path;
    if (path.m() <= path.n())
        throw Error(Errc::ShapeUnsupported, "hit_and_lift needs m > n");
    if (req.a < 0 || req.a > req.b)
        throw Error(Errc::PreconditionViolated, "hit_and_lift needs 0 <= a <= b");
    const Composition alpha = composition_type(path);
    const int r = rr_formula(alpha, path.m());
    if (run(path) != r + req.b || ret(path) != r)
        throw Error(Errc::PreconditionViolated,
                    "input must lie in the class (run, ret) = (r+b, r), r = rr(alpha, m)");
    const Signature plain = plain_signature(path);
    Rebuild rebuilt = rebuild_linear(alpha, plain, path.shape(), r + req.a);

    HitLiftTrace trace{DyckPath(path.shape(), std::move(rebuilt.steps)),
                       std::move(rebuilt.lift_columns),
                       static_cast<int>(plain.size())};
    if (static_cast<int>(trace.extra_lift_columns.size()) != req.b - req.a)
        throw Error(Errc::InternalInvariant, "extra lift count is not b - a");
    if (run(trace.image) != r + req.a || ret(trace.image) != r + req.b - req.a ||
        composition_type(trace.image) != alpha ||
        plain_signature(trace.image) != plain)
        throw Error(Errc::InternalInvariant, "hit_and_lift image left its class");
    return trace;
}

HitLiftTrace hit_and_lift(const DyckPath& path, int a, int b) {
    return hit_and_lift(HitLiftRequest{path, a, b});
}

DyckPath inverse_hit_and_lift(const DyckPath& image, int a, int b) {
    if (image.m() <= image.n())
        throw Error(Errc::ShapeUnsupported, "inverse_hit_and_lift needs m > n");
    if (a < 0 || a > b)
        throw Error(Errc::PreconditionViolated, "inverse_hit_and_lift needs 0 <= a <= b");
    const Composition alpha = composition_type(image);
    const int r = rr_formula(alpha, image.m());
    if (run(image) != r + a || ret(image) != r + b - a)
        throw Error(Errc::PreconditionViolated,
                    "image must lie in the class (run, ret) = (r+a, r+b-a)");
    // The preimage's full signature is the plain signature pushed behind
    // r+b leading ones and the forced zero.
    Signature full(r + b, '1');
    full += '0';
    full += plain_signature(image);
    DyckPath path = from_comp_signature(alpha, full, image.shape());
    if (run(path) != r + b || ret(path) != r)
        throw Error(Errc::InternalInvariant, "reconstructed preimage left its class");
    return path;
}

DyckPath involution_phi(const DyckPath& path) {
    if (path.n() == 0) return path;
    if (path.m() < path.n())
        throw Error(Errc::ShapeUnsupported, "involution_phi needs m >= n");
    if (path.m() == path.n())
        return strip_embedding(involution_phi(embed_square(path)), path.shape());

    const int k = run(path);
    const int l = ret(path);
    if (k == l) return path;
    const Composition alpha = composition_type(path);
    const Signature plain = plain_signature(path);
    Rebuild rebuilt = rebuild_linear(alpha, plain, path.shape(), l);
    DyckPath image(path.shape(), std::move(rebuilt.steps));
    if (run(image) != l || ret(image) != k ||
        composition_type(image) != alpha || plain_signature(image) != plain)
        throw Error(Errc::InternalInvariant, "involution_phi image left its class");
    return image;
}

DyckPath block_hit_and_lift(const DyckPath& path, int a, int b) {
    if (path.m() <= path.n())
        throw Error(Errc::ShapeUnsupported, "block_hit_and_lift needs m > n");
    if (path.n() == 0)
        throw Error(Errc::EmptyPath, "block_hit_and_lift needs at least one north step");
    if (a < 0 || a > b)
        throw Error(Errc::PreconditionViolated, "block_hit_and_lift needs 0 <= a <= b");
    const int r = rr_tilde(path);
    const int rrun = ratio_run(path);
    const int rret = ret(path);
    const int target = rrun - (b - a);
    if (target < r || rrun + rret - target < r)
        throw Error(Errc::PreconditionViolated,
                    "b - a moves the path below the class floor rr_tilde");
    const Composition alpha = composition_type(path);
    const RatioSplit split = ratio_split(path);
    const int k = path.m() / path.n();
    Rebuild rebuilt =
        rebuild_blocks(alpha, k, split.sign1, split.sign2, path.shape(), target);
    DyckPath image(path.shape(), std::move(rebuilt.steps));
    const RatioSplit check = ratio_split(image);
    if (ratio_run(image) != target || ret(image) != rrun + rret - target ||
        composition_type(image) != alpha || check.sign1 != split.sign1 ||
        check.sign2 != split.sign2)
        throw Error(Errc::InternalInvariant, "block_hit_and_lift image left its class");
    return image;
}

DyckPath involution_psi(const DyckPath& path) {
    if (path.n() == 0) return path;
    if (path.m() < path.n())
        throw Error(Errc::ShapeUnsupported, "involution_psi needs m >= n");
    if (path.m() == path.n())
        return strip_embedding(involution_psi(embed_square(path)), path.shape());

    const int rrun = ratio_run(path);
    const int rret = ret(path);
    if (rrun == rret) return path;
    const Composition alpha = composition_type(path);
    const RatioSplit split = ratio_split(path);
    const int k = path.m() / path.n();
    Rebuild rebuilt =
        rebuild_blocks(alpha, k, split.sign1, split.sign2, path.shape(), rret);
    DyckPath image(path.shape(), std::move(rebuilt.steps));
    const RatioSplit check = ratio_split(image);
    if (ratio_run(image) != rret || ret(image) != rrun ||
        composition_type(image) != alpha || check.sign1 != split.sign1 ||
        check.sign2 != split.sign2)
        throw Error(Errc::InternalInvariant, "involution_psi image left its class");
    return image;
}

}  // namespace ratpath
