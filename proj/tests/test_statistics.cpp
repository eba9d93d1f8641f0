#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "fixtures.hpp"
#include "ratpath/enumeration.hpp"
#include "ratpath/statistics.hpp"
#include "testutil.hpp"

using namespace ratpath;

namespace {

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

TEST_CASE("worked example on the 7x5 grid") {
    const DyckPath p = fixtures::path7x5();
    CHECK(ret(p) == 1);
    CHECK(run(p) == 2);
    CHECK(inor(p) == 2);
    CHECK(nc(p) == 3);
    CHECK(rr_direct(p) == 1);
    CHECK(coarea_total(p) == 5);
}

TEST_CASE("worked example on the 15x7 grid") {
    const DyckPath p = fixtures::path15x7();
    const StatReport r = stat_report(p);
    CHECK(r.ret == 2);
    CHECK(r.run == 4);
    CHECK(r.ratio_run == 2);
    CHECK(r.inor == 1);
    CHECK(r.nc == 5);
    CHECK(r.rr == 1);
    CHECK(r.rr_tilde == 1);
    CHECK(r.coarea_total == 28);
}

TEST_CASE("single column paths") {
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            const std::string steps = std::string(n, 'N') + std::string(m, 'E');
            const DyckPath p = parse_path(steps, GridShape{m, n});
            CHECK(run(p) == 1);
            CHECK(ret(p) == 1);
            CHECK(inor(p) == n);
            CHECK(nc(p) == 1);
            CHECK(full_signature(p) == "1" + std::string(m - 1, '0'));
        }
    }
}

TEST_CASE("run agrees with the coarea definition on every small shape") {
    for (int m = 1; m <= 7; ++m)
        for (int n = 0; n <= 7; ++n)
            for_each_path(GridShape{m, n}, [](const DyckPath& p) {
                if (p.n() == 0) {
                    CHECK(run(p) == 0);
                    return;
                }
                CHECK(run(p) == testutil::oracle_run(p));
            });
}

TEST_CASE("ret counts diagonal visits on every small shape") {
    for (int m = 1; m <= 7; ++m)
        for (int n = 0; n <= 7; ++n)
            for_each_path(GridShape{m, n}, [m, n](const DyckPath& p) {
                CHECK(ret(p) == testutil::oracle_ret(p));
                // Wide or square shapes never chain two low points, so the
                // block count equals the raw count of return positions.
                if (m >= n) CHECK(ret(p) == static_cast<int>(return_positions(p).size()));
            });
}

TEST_CASE("the narrow 4x6 shape separates the two readings of ret") {
    const DyckPath witness = parse_path(fixtures::kWitness4x6, GridShape{4, 6});
    CHECK(run(witness) == 3);
    CHECK(ret(witness) == 2);
    CHECK(return_positions(witness).size() == 3);

    const DyckPath other = parse_path(fixtures::kOther4x6, GridShape{4, 6});
    CHECK(run(other) == 2);
    CHECK(ret(other) == 3);
}

TEST_CASE("area and coarea split the cells around the diagonal") {
    CHECK(area(parse_path("NNEE", GridShape{2, 2})) == 1);
    CHECK(coarea_total(parse_path("NNEE", GridShape{2, 2})) == 0);
    CHECK(area(parse_path("NENE", GridShape{2, 2})) == 0);
    CHECK(coarea_total(parse_path("NENE", GridShape{2, 2})) == 1);
    CHECK(area(parse_path("NNENEE", GridShape{3, 3})) == 2);
    CHECK(cells_above_diagonal(GridShape{3, 3}) == 3);

    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
            for_each_path(GridShape{m, n}, [](const DyckPath& p) {
                CHECK(area(p) == testutil::oracle_area(p));
                CHECK(area(p) + coarea_total(p) == cells_above_diagonal(p.shape()));
            });
}

TEST_CASE("ratio_run reduces to run when the ratio is one") {
    for_each_path(GridShape{7, 5}, [](const DyckPath& p) {
        CHECK(ratio_run(p) == run(p));
    });
    CHECK(thrown_code([] { ratio_run(parse_path(fixtures::kWitness4x6, GridShape{4, 6})); }) ==
          Errc::ShapeUnsupported);
}

TEST_CASE("rr is a class invariant computable from the composition") {
    for (int m = 3; m <= 8; ++m)
        for (int n = 1; n < m; ++n)
            for_each_path(GridShape{m, n}, [m](const DyckPath& p) {
                const int direct = rr_direct(p);
                CHECK(direct == rr_formula(composition_type(p), m));
                CHECK(direct <= run(p));
                CHECK(direct <= ret(p));
            });
}

TEST_CASE("rr_tilde on the worked block examples") {
    CHECK(rr_tilde(fixtures::block_left()) == 1);
    CHECK(rr_tilde(fixtures::block_right()) == 1);
    CHECK(rr_tilde(parse_path("NENEENEE", GridShape{5, 3})) == 2);
    CHECK(thrown_code([] { rr_tilde(parse_path("NENEE", GridShape{3, 2})); }) == kNoThrow);
    CHECK(thrown_code([] { rr_tilde(parse_path("NNEE", GridShape{2, 2})); }) ==
          Errc::ShapeUnsupported);
}

TEST_CASE("rr_tilde never exceeds ratio_run or ret") {
    for (int m = 3; m <= 8; ++m)
        for (int n = 1; n < m; ++n)
            for_each_path(GridShape{m, n}, [](const DyckPath& p) {
                const int base = rr_tilde(p);
                CHECK(base >= 1);
                CHECK(base <= ratio_run(p));
                CHECK(base <= ret(p));
            });
}

TEST_CASE("full signature marks the east closing each component") {
    const DyckPath p = fixtures::path15x7();
    CHECK(full_signature(p) == "111100000010000");
    for_each_path(GridShape{6, 4}, [](const DyckPath& q) {
        const Signature sig = full_signature(q);
        CHECK(static_cast<int>(sig.size()) == q.m());
        int ones = 0;
        for (const char c : sig) ones += c == '1';
        CHECK(ones == nc(q));
    });
}

TEST_CASE("plain signature drops the forced and accounted easts") {
    CHECK(plain_signature(fixtures::path15x7()) == "000000000");
    CHECK(plain_signature(fixtures::hitlift_input()) == "0001100000");
    for_each_path(GridShape{8, 5}, [](const DyckPath& p) {
        const int expected = p.m() - run(p) - (ret(p) - rr_direct(p)) - 1;
        CHECK(static_cast<int>(plain_signature(p).size()) == expected);
    });
    CHECK(thrown_code([] { plain_signature(parse_path("NNEE", GridShape{2, 2})); }) ==
          Errc::ShapeUnsupported);
}

TEST_CASE("ratio split of the 23x11 block example") {
    const RatioSplit split = ratio_split(fixtures::block_left());
    CHECK(split.sign1 == fixtures::kBlockSign1);
    CHECK(split.sign2 == fixtures::kBlockSign2);
    CHECK(split.p1_steps == fixtures::kBlockP1);
    CHECK(split.p2_steps == fixtures::kBlockP2);
    CHECK(split.block_columns == fixtures::kBlockColumns);
}

TEST_CASE("ratio split of the full staircase has nothing left over") {
    const DyckPath stair = parse_path("NEENEE", GridShape{4, 2});
    const RatioSplit split = ratio_split(stair);
    CHECK(split.block_columns == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(split.sign2.empty());
    CHECK(split.p2_steps.empty());
    CHECK(split.p1_steps == "NEENEE");
    CHECK(thrown_code([] { ratio_split(parse_path("NNEE", GridShape{2, 2})); }) ==
          Errc::ShapeUnsupported);
}

TEST_CASE("ratio split never throws on strictly wide shapes") {
    for (int m = 2; m <= 8; ++m)
        for (int n = 1; n < m; ++n)
            for_each_path(GridShape{m, n}, [m, n](const DyckPath& p) {
                const RatioSplit split = ratio_split(p);
                const int k = m / n;
                CHECK(static_cast<int>(split.sign1.size()) ==
                      k * static_cast<int>(split.block_columns.size()));
            });
}

TEST_CASE("stat report zeroes the fields that need a wide shape") {
    const StatReport r = stat_report(parse_path(fixtures::kWitness4x6, GridShape{4, 6}));
    CHECK(r.run == 3);
    CHECK(r.ret == 2);
    CHECK(r.ratio_run == 0);
    CHECK(r.rr == 0);
    CHECK(r.rr_tilde == 0);
}
