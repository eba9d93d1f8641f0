#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "ratpath/enumeration.hpp"
#include "ratpath/path.hpp"
#include "ratpath/statistics.hpp"

using namespace ratpath;

namespace {

// Sentinel distinct from every real code, so "did not throw" fails the CHECK.
constexpr auto kNoThrow = static_cast<Errc>(-1);

template <typename Body>
Errc thrown_code(Body body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    return kNoThrow;
}

}  // namespace

TEST_CASE("rank is the signed distance from the diagonal") {
    GridShape shape{15, 7};
    CHECK(rank(shape, 0, 0) == 0);
    CHECK(rank(shape, 10, 5) == 5);
    CHECK(rank(shape, 1, 0) == -7);
    CHECK(rank(shape, 0, 1) == 15);
}

TEST_CASE("parse accepts the worked examples") {
    const DyckPath a = fixtures::path7x5();
    CHECK(a.m() == 7);
    CHECK(a.n() == 5);
    CHECK(a.size() == 12);
    CHECK(a.steps() == fixtures::kPath7x5);

    const DyckPath b = fixtures::path15x7();
    CHECK(b.lattice_points().size() == 23);
    CHECK(b.lattice_points().front() == Point{0, 0});
    CHECK(b.lattice_points().back() == Point{15, 7});
}

TEST_CASE("parse rejects malformed input") {
    CHECK(thrown_code([] { parse_path("NXE", GridShape{2, 1}); }) == Errc::BadCharacter);
    CHECK(thrown_code([] { parse_path("NE", GridShape{2, 2}); }) == Errc::WrongStepCount);
    CHECK(thrown_code([] { parse_path("ENNE", GridShape{2, 2}); }) == Errc::BelowDiagonal);
    CHECK(thrown_code([] { parse_path("NEEN", GridShape{2, 2}); }) == Errc::BelowDiagonal);
    CHECK(thrown_code([] { GridShape bad{0, 0}; parse_path("", bad); }) == Errc::BadArgument);
}

TEST_CASE("paths with no norths are valid") {
    const DyckPath p = parse_path("EEE", GridShape{3, 0});
    CHECK(p.n() == 0);
    CHECK(coarea_sequence(p).empty());
    // rank 0 is not below n = 0, so nothing counts as a return.
    CHECK(return_positions(p).empty());
}

TEST_CASE("return positions of the worked examples") {
    const auto fig = return_positions(fixtures::path15x7());
    REQUIRE(fig.size() == 2);
    CHECK(fig[0] == Point{0, 0});
    CHECK(fig[1] == Point{10, 5});

    const auto small = return_positions(fixtures::path7x5());
    REQUIRE(small.size() == 1);
    CHECK(small[0] == Point{0, 0});
}

TEST_CASE("coarea sequence round trip") {
    const DyckPath p = fixtures::path7x5();
    const CoareaSeq u = coarea_sequence(p);
    CHECK(u == CoareaSeq{0, 0, 1, 1, 3});
    CHECK(from_coarea(u, p.shape()) == p);

    const DyckPath q = fixtures::path15x7();
    CHECK(coarea_sequence(q) == CoareaSeq{0, 1, 2, 2, 3, 10, 10});
    CHECK(from_coarea(coarea_sequence(q), q.shape()) == q);
}

TEST_CASE("from_coarea validates its input") {
    CHECK(thrown_code([] { from_coarea({1, 0}, GridShape{3, 2}); }) == Errc::NotWeaklyIncreasing);
    CHECK(thrown_code([] { from_coarea({0, 0, 0}, GridShape{3, 2}); }) == Errc::WrongStepCount);
}

TEST_CASE("composition and partition type") {
    const DyckPath p = fixtures::path7x5();
    CHECK(composition_type(p) == Composition{2, 2, 1});

    const DyckPath q = fixtures::path15x7();
    CHECK(composition_type(q) == Composition{1, 1, 2, 1, 2});
    CHECK(partition_type(q) == Composition{2, 2, 1, 1, 1});
}

TEST_CASE("component signature reconstruction") {
    const DyckPath q = fixtures::path15x7();
    const Signature sig = full_signature(q);
    CHECK(sig == "111100000010000");
    CHECK(from_comp_signature(composition_type(q), sig, q.shape()) == q);
}

TEST_CASE("component signature reconstruction sweeps a small grid") {
    for_each_path(GridShape{7, 4}, [](const DyckPath& p) {
        const auto alpha = composition_type(p);
        const auto sig = full_signature(p);
        CHECK(from_comp_signature(alpha, sig, p.shape()) == p);
    });
}

TEST_CASE("from_comp_signature validates its input") {
    CHECK(thrown_code([] {
        from_comp_signature({1, 1}, "100", GridShape{3, 2});
    }) == Errc::OnesCountMismatch);
    CHECK(thrown_code([] {
        from_comp_signature({1, 1}, "1100", GridShape{3, 2});
    }) == Errc::WrongStepCount);
}

TEST_CASE("square paths embed into the next wider grid") {
    const DyckPath square = parse_path("NNENEE", GridShape{3, 3});
    const DyckPath wide = embed_square(square);
    CHECK(wide.shape() == GridShape{4, 3});
    CHECK(wide.steps() == "NNENEEE");
    CHECK(thrown_code([] { embed_square(parse_path("NENEE", GridShape{3, 2})); }) ==
          Errc::ShapeUnsupported);
}

TEST_CASE("path ordering is by step string") {
    const DyckPath a = parse_path("NENE", GridShape{2, 2});
    const DyckPath b = parse_path("NNEE", GridShape{2, 2});
    CHECK(a < b);
    CHECK(a == a);
    CHECK(!(a == b));
}
