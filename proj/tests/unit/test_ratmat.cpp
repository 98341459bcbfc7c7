#include "hilbcoh/ratmat.hpp"

#include <doctest.h>

using namespace hilbcoh;

TEST_CASE("determinant and inverse") {
    RatMat m{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK(m.det() == 1);
    RatMat inv = m.inverse();
    CHECK(m * inv == RatMat::identity(2));
    CHECK(inv * m == RatMat::identity(2));

    RatMat s{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(s.det() == 0);
    CHECK_THROWS_AS(s.inverse(), std::domain_error);
}

TEST_CASE("determinant sign under row swap") {
    RatMat m{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(m.det() == -1);
}

TEST_CASE("solve_unique") {
    RatMat a{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
    auto x = solve_unique(a, {Rat(3), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);

    // inconsistent
    RatMat b{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    CHECK(!solve_unique(b, {Rat(1), Rat(3)}).has_value());
    // underdetermined
    CHECK(!solve_unique(b, {Rat(1), Rat(2)}).has_value());

    // overdetermined but consistent
    RatMat c(3, 2);
    c.at(0, 0) = 1;
    c.at(1, 1) = 1;
    c.at(2, 0) = 1;
    c.at(2, 1) = 1;
    auto y = solve_unique(c, {Rat(5), Rat(7), Rat(12)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 5);
    CHECK((*y)[1] == 7);
}

TEST_CASE("rat_pow handles negative exponents") {
    CHECK(rat_pow(Rat(2), 10) == 1024);
    CHECK(rat_pow(Rat(2), -2) == Rat(1, 4));
    CHECK(rat_pow(Rat(-3), 3) == -27);
    CHECK(rat_pow(Rat(5), 0) == 1);
}
