#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>
#include <set>
#include <utility>

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

bool matches(const JointTable& table, const std::vector<std::vector<long long>>& expected) {
    if (table.matrix.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (table.matrix[i].size() != expected[i].size()) return false;
        for (std::size_t j = 0; j < expected[i].size(); ++j)
            if (table.matrix[i][j] != expected[i][j]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("path counts on fixed shapes") {
    CHECK(count_paths(GridShape{12, 4}) == 140);
    CHECK(count_paths(GridShape{13, 5}) == 476);
    CHECK(count_paths(GridShape{15, 7}) == 7752);
    CHECK(count_paths(GridShape{8, 4}) == 55);
    CHECK(count_paths(GridShape{7, 4}) == 30);
    CHECK(count_paths(GridShape{9, 8}) == 1430);
    CHECK(count_paths(GridShape{10, 9}) == 4862);
    CHECK(count_paths(GridShape{4, 6}) == 23);
}

TEST_CASE("square counts follow the catalan numbers") {
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 1; n <= 7; ++n) CHECK(count_paths(GridShape{n, n}) == catalan[n]);
}

TEST_CASE("coprime counts follow the cycle lemma") {
    for (int m = 2; m <= 11; ++m)
        for (int n = 1; n < m; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(count_paths(GridShape{m, n}) ==
                  testutil::binomial(m + n, n) / (m + n));
        }
}

TEST_CASE("counts agree with an independent grid walk") {
    for (int m = 1; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
            CHECK(count_paths(GridShape{m, n}) == testutil::oracle_count(GridShape{m, n}));
}

TEST_CASE("enumeration is complete, distinct and valid") {
    const GridShape shape{8, 5};
    std::set<std::string> seen;
    for_each_path(shape, [&](const DyckPath& p) {
        CHECK(p.shape() == shape);
        seen.insert(p.steps());
    });
    CHECK(BigInt(seen.size()) == count_paths(shape));
}

TEST_CASE("enumeration by composition partitions the shape") {
    const int m = 7;
    const int n = 4;
    BigInt total = 0;
    for (const auto& alpha : testutil::all_compositions(n)) {
        const auto paths = all_paths(m, alpha);
        for (const auto& p : paths) CHECK(composition_type(p) == alpha);
        total += paths.size();
    }
    CHECK(total == count_paths(GridShape{m, n}));

    const auto fixed = all_paths(5, Composition{1, 1, 1});
    REQUIRE(fixed.size() == 2);
    std::set<std::string> steps;
    for (const auto& p : fixed) steps.insert(p.steps());
    CHECK(steps == std::set<std::string>{"NENENEEE", "NENEENEE"});
}

TEST_CASE("joint run and ret tables on the reference shapes") {
    CHECK(matches(joint_table(GridShape{12, 4}, "run", "ret"), fixtures::kTable12x4));
    CHECK(matches(joint_table(GridShape{13, 5}, "run", "ret"), fixtures::kTable13x5));
}

TEST_CASE("joint tables agree with a direct tally") {
    const GridShape shape{7, 3};
    auto value = [](const std::string& name, const DyckPath& p) {
        if (name == "run") return run(p);
        if (name == "ret") return ret(p);
        if (name == "ratio_run") return ratio_run(p);
        return inor(p);
    };
    for (const auto& pair : {std::pair<std::string, std::string>{"run", "ret"},
                             {"ratio_run", "ret"},
                             {"run", "inor"}}) {
        const JointTable table = joint_table(shape, pair.first, pair.second);
        std::map<std::pair<int, int>, BigInt> tally;
        for_each_path(shape, [&](const DyckPath& p) {
            tally[{value(pair.first, p), value(pair.second, p)}] += 1;
        });
        for (int k = 1; k <= shape.n; ++k)
            for (int l = 1; l <= shape.n; ++l) {
                const auto it = tally.find({k, l});
                const BigInt want = it == tally.end() ? BigInt(0) : it->second;
                CHECK(table.matrix[k - 1][l - 1] == want);
            }
    }
}

TEST_CASE("joint table rejects unknown statistics") {
    CHECK(thrown_code([] { joint_table(GridShape{4, 2}, "run", "height"); }) ==
          Errc::BadArgument);
}

TEST_CASE("joint table by composition refines the shape table") {
    const int m = 7;
    const int n = 4;
    const JointTable whole = joint_table(GridShape{m, n}, "run", "ret");
    std::vector<std::vector<BigInt>> sum(n, std::vector<BigInt>(n, 0));
    for (const auto& alpha : testutil::all_compositions(n)) {
        const JointTable part = joint_table_by_composition(m, alpha, "run", "ret");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sum[i][j] += part.matrix[i][j];
    }
    CHECK(sum == whole.matrix);
}

TEST_CASE("symmetry verification distinguishes wide from narrow") {
    CHECK(verify_symmetry(GridShape{12, 4}).pass);
    CHECK(verify_symmetry(GridShape{7, 7}).pass);
    const VerifyReport narrow = verify_symmetry(GridShape{4, 6});
    CHECK(!narrow.applicable);
}

TEST_CASE("hankel structure holds exactly when the ratio is at least two") {
    CHECK(verify_hankel(GridShape{12, 4}).pass);
    CHECK(verify_hankel(GridShape{13, 5}).pass);
    CHECK(!verify_hankel(GridShape{7, 5}).applicable);

    // Constant skew diagonals, read off the frozen 13x5 matrix.
    for (int c = 2; c <= 6; ++c)
        for (int k = 1; k < c && k <= 5; ++k) {
            const int l = c - k;
            if (l < 1 || l > 5) continue;
            CHECK(fixtures::kTable13x5[k - 1][l - 1] == fixtures::kTable13x5[0][c - 2]);
        }
}

TEST_CASE("suffix set counts match the brute force") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& alpha : testutil::all_compositions(n))
            for (int m = n + 1; m <= n + 5; ++m)
                for (int j = 0; j <= static_cast<int>(alpha.size()); ++j)
                    CHECK(count_T(m, alpha, j) == testutil::oracle_t_count(m, alpha, j));
}

TEST_CASE("suffix signatures are distinct witnesses of the count") {
    const Composition alpha{2, 1, 1, 1};
    const auto sigs = enumerate_T_signatures(11, alpha, 2);
    CHECK(BigInt(sigs.size()) == count_T(11, alpha, 2));
    for (const auto& sig : sigs) CHECK(sig.size() == 11 - 2 - 1);

    CHECK(count_T(3, Composition{1, 1}, 2) == 1);
}

TEST_CASE("class sizes follow the suffix counts above the floor") {
    // 3x2 with composition (1,1): the identity only covers classes at or
    // above the class floor rr = 2; below it the class is empty even though
    // the suffix count at the same index is not.
    const Composition alpha{1, 1};
    const int m = 3;
    std::map<std::pair<int, int>, int> classes;
    for (const auto& p : all_paths(m, alpha)) classes[{run(p), ret(p)}] += 1;
    CHECK(rr_formula(alpha, m) == 2);
    CHECK(classes.size() == 1);
    CHECK(classes[{2, 2}] == 1);
    CHECK(classes.count({1, 3}) == 0);
    CHECK(count_T(m, alpha, 2) == 1);
}

TEST_CASE("the cap guards large enumerations") {
    EnumLimits tight;
    tight.cap = 10;
    CHECK(thrown_code([&] { joint_table(GridShape{5, 4}, "run", "ret", tight); }) ==
          Errc::CapExceeded);
    tight.force = true;
    CHECK(thrown_code([&] { joint_table(GridShape{5, 4}, "run", "ret", tight); }) == kNoThrow);
}

TEST_CASE("parallel and sequential tables agree") {
    EnumLimits forked;
    forked.parallel_threshold = 1;
    forked.threads = 3;
    const JointTable a = joint_table(GridShape{10, 9}, "run", "ret", forked);
    const JointTable b = joint_table(GridShape{10, 9}, "run", "ret");
    CHECK(a.matrix == b.matrix);
}

TEST_CASE("empty shapes produce empty tables") {
    const JointTable table = joint_table(GridShape{3, 0}, "run", "ret");
    CHECK(table.matrix.empty());
    CHECK(count_paths(GridShape{3, 0}) == 1);
}
