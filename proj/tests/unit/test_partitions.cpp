#include "hilbcoh/partitions.hpp"

#include <doctest.h>

using namespace hilbcoh;

TEST_CASE("partition counts") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("class sizes add up to n!") {
    for (int n = 1; n <= 7; ++n) {
        Int total = 0;
        for (const auto& t : partitions_of(n)) total += t.class_size();
        CHECK(total == factorial(n));
    }
}

TEST_CASE("class size values") {
    // transpositions in S_4: 4!/2/2! ... = 6
    CHECK(CycleType({2, 1, 1}).class_size() == 6);
    // 3-cycles in S_3: 2
    CHECK(CycleType({3}).class_size() == 2);
    // identity class
    CHECK(CycleType({1, 1, 1, 1}).class_size() == 1);
}

TEST_CASE("sgn is (-1)^{n-l}") {
    CHECK(CycleType({2}).sgn() == -1);
    CHECK(CycleType({3}).sgn() == 1);
    CHECK(CycleType({2, 2}).sgn() == 1);
    CHECK(CycleType({4, 3, 1}).sgn() == -1);
}

TEST_CASE("canonical sorting and validation") {
    CycleType t({1, 3, 2});
    CHECK(t.parts() == std::vector<int>{3, 2, 1});
    CHECK(t.n() == 6);
    CHECK_THROWS_AS(CycleType({0, 1}), std::invalid_argument);
    CHECK(t.to_string() == "(3,2,1)");
}

TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(40, 20) == Int("137846528820"));
}
