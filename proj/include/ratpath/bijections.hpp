#pragma once

#include "ratpath/path.hpp"
#include "ratpath/statistics.hpp"

#include <vector>

namespace ratpath {

// Hit-and-lift maps between (run, ret) classes of a composition family, and
// the two involutions built from them.
//
// Writing r = rr(alpha, m), hit_and_lift sends the class (r+b, r) to the
// class (r+a, r+b-a) for 0 <= a <= b.  The image keeps the composition type
// and the plain signature; it is rebuilt from a prefix of r+a components,
// the forced east, and a sweep over the plain signature bits.  Whenever the
// partial path sits on a return position a component is appended without
// consuming a bit (an extra lift); exactly b-a of those fire.
//
// involution_phi pairs the members of D^(k,l) and D^(l,k) sharing a plain
// signature, which swaps run and ret.  block_hit_and_lift and involution_psi
// are the column-block analogues driven by sign1/sign2 of ratio_split; they
// swap ratio_run and ret.  Square paths are handled by embedding into the
// (n+1) x n grid and stripping the final east afterwards.

struct HitLiftRequest {
    DyckPath path;
    int a = 0;
    int b = 0;
};

struct HitLiftTrace {
    DyckPath image;
    std::vector<int> extra_lift_columns;  // image columns of the lifted easts
    int bits_consumed = 0;
};

HitLiftTrace hit_and_lift(const HitLiftRequest& req);
HitLiftTrace hit_and_lift(const DyckPath& path, int a, int b);

// Rebuilds the canonical-class preimage from 1^(r+b) 0 plain_signature(image).
DyckPath inverse_hit_and_lift(const DyckPath& image, int a, int b);

DyckPath involution_phi(const DyckPath& path);

// Moves a path b-a block lifts down in ratio_run, i.e. from its class
// (ratio_run, ret) to (ratio_run-(b-a), ret+(b-a)), keeping composition,
// sign1 and sign2.  For the canonical input class (r+b, r), r = rr_tilde,
// this is the map (r+b, r) -> (r+a, r+b-a).
DyckPath block_hit_and_lift(const DyckPath& path, int a, int b);

DyckPath involution_psi(const DyckPath& path);

}  // namespace ratpath
