#include "hilbcoh/oracle.hpp"

#include "hilbcoh/evaluate.hpp"
#include "hilbcoh/kexpr.hpp"

#include "test_common.hpp"

#include <doctest.h>

using namespace hilbcoh;
using namespace hilbcoh::testutil;

TEST_CASE("identity trace is the graded Euler dimension") {
    auto R = rank1();
    // one even and one odd cell: Euler characteristic 0 per tensor factor
    CellSpace space{R, {{0, R->unit_index()}, {1, R->divisor_index(0)}}};
    ExplicitGModule m(space, 2);
    CHECK(m.total_trace({0, 1}) == 0); // (1 - 1)^2
    auto buckets = m.brute_force_trace({0, 1});
    CHECK(buckets[{0, 0}] == 1);
    CHECK(buckets[{0, 1}] == -2);
    CHECK(buckets[{1, 1}] == 1);
}

TEST_CASE("transposition on an odd line picks up the Koszul sign") {
    auto R = rank1();
    CellSpace space{R, {{1, R->unit_index()}}};
    ExplicitGModule m(space, 2);
    CHECK(m.total_trace({1, 0}) == -1);
}

TEST_CASE("3-cycle on a 2-dimensional even space has trace 2") {
    auto R = rank1();
    CellSpace space{R, {{0, R->unit_index()}, {0, R->divisor_index(0)}}};
    ExplicitGModule m(space, 3);
    CHECK(m.dim() == 8);
    auto g = ExplicitGModule::permutation_of_type(CycleType({3}));
    CHECK(m.total_trace(g) == 2); // sum of eigenvalue cubes, 1^3 + 1^3
    auto buckets = m.brute_force_trace(g);
    CHECK(buckets[{0, 0, 0}] == 1);
    CHECK(buckets[{1, 1, 1}] == 1);
    CHECK(buckets.size() == 2);
}

TEST_CASE("chi twist multiplies the action by sgn") {
    auto R = rank1();
    CellSpace space{R, {{0, R->unit_index()}}};
    ExplicitGModule plain(space, 3);
    ExplicitGModule twisted(space, 3, true);
    for (const auto& t : partitions_of(3)) {
        auto g = ExplicitGModule::permutation_of_type(t);
        CHECK(twisted.total_trace(g) == plain.total_trace(g) * t.sgn());
    }
}

TEST_CASE("word action matches the rearrangement convention") {
    auto R = rank1();
    CellSpace space{R,
                    {{0, R->unit_index()},
                     {0, R->divisor_index(0)},
                     {0, R->point_index()}}};
    ExplicitGModule m(space, 3);
    // the 3-cycle 0 -> 1 -> 2 -> 0 moves the letter at position i to g(i)
    auto [word, sign] = m.act({1, 2, 0}, {0, 1, 2});
    CHECK(sign == 1);
    CHECK(word == std::vector<int>{2, 0, 1});
}

TEST_CASE("non-permutations are rejected") {
    auto R = rank1();
    CellSpace space{R, {{0, R->unit_index()}}};
    ExplicitGModule m(space, 3);
    CHECK_THROWS_AS(m.brute_force_trace({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(m.brute_force_trace({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(m.brute_force_trace({0, 1, 3}), std::invalid_argument);
}

TEST_CASE("formula matches oracle for a mixed-parity space, n <= 4") {
    auto R = rank1();
    CellSpace space{R, {{0, R->unit_index()}, {1, R->divisor_index(0)}}};
    for (int n = 2; n <= 4; ++n) {
        ExplicitGModule m(space, n);
        KExpr e = KExpr::box(space.k_class(), +1, n);
        Evaluator ev;
        for (const auto& t : partitions_of(n)) {
            auto oracle = m.brute_force_trace(ExplicitGModule::permutation_of_type(t));
            auto formula = bucket_formula(ev.ch_g(e, t), space, t);
            CHECK(oracle == formula);
        }
    }
}

TEST_CASE("bucket_formula requires distinct basis elements") {
    auto R = rank1();
    CellSpace space{R, {{0, R->unit_index()}, {0, R->unit_index()}}};
    KExpr e = KExpr::box(space.k_class(), +1, 2);
    CycleType t({2});
    CHECK_THROWS_AS(bucket_formula(ch_g(e, t), space, t),
                    std::invalid_argument);
}

TEST_CASE("permutation_of_type") {
    CHECK(ExplicitGModule::permutation_of_type(CycleType({2, 1})) ==
          std::vector<int>{1, 0, 2});
    CHECK(ExplicitGModule::permutation_of_type(CycleType({3})) ==
          std::vector<int>{1, 2, 0});
    CHECK(ExplicitGModule::permutation_of_type(CycleType({1, 1})) ==
          std::vector<int>{0, 1});
}
