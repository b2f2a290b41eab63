#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <doctest.h>

#include "seifert/continued_fraction.hpp"
#include "seifert/dedekind.hpp"
#include "seifert/rational.hpp"

using namespace seifert;

TEST_CASE("rational helpers") {
    CHECK(make_rat(6, -4) == make_rat(-3, 2));
    CHECK(rat_floor(make_rat(-1, 3)) == -1);
    CHECK(rat_floor(make_rat(7, 3)) == 2);
    CHECK(rat_frac(make_rat(-1, 3)) == make_rat(2, 3));
    CHECK(is_integer(make_rat(8, 4)));
    CHECK(rat_str(make_rat(3, 8)) == "3/8");
    CHECK(rat_str(make_rat(-4, 2)) == "-2");
    CHECK(parse_rat("-5/10") == make_rat(-1, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK_THROWS_AS(parse_rat("1/0"), invalid_input);
    CHECK_THROWS_AS(parse_rat("x"), invalid_input);
    CHECK_THROWS_AS(parse_rat("1/2/3"), invalid_input);
    CHECK_THROWS_AS(parse_rat(""), invalid_input);
    CHECK_THROWS_AS(make_rat(1, 0), invalid_input);
}

TEST_CASE("dedekind symbol") {
    CHECK(dedekind_symbol(Rat(0)) == 0);
    CHECK(dedekind_symbol(Rat(5)) == 0);
    CHECK(dedekind_symbol(make_rat(1, 2)) == 0);
    CHECK(dedekind_symbol(make_rat(-1, 3)) == make_rat(1, 6));
    CHECK(dedekind_symbol(make_rat(1, 4)) == make_rat(-1, 4));
}

TEST_CASE("dedekind sum values") {
    CHECK(dedekind_sum(Int(0), Int(1)) == 0);
    CHECK(dedekind_sum(Int(123), Int(1)) == 0);
    CHECK(dedekind_sum(Int(1), Int(2)) == 0);
    CHECK(dedekind_sum(Int(1), Int(3)) == make_rat(1, 18));
    CHECK(dedekind_sum(Int(-1), Int(7)) == make_rat(-5, 14));
    // s(1,k) = (k-1)(k-2)/(12k)
    for (long k = 1; k <= 24; ++k)
        CHECK(dedekind_sum(Int(1), Int(k)) == make_rat(Int((k - 1) * (k - 2)), Int(12 * k)));
    CHECK_THROWS_AS(dedekind_sum(Int(1), Int(0)), invalid_input);
    CHECK_THROWS_AS(dedekind_sum(Int(1), Int(-3)), invalid_input);
}

TEST_CASE("dedekind sum is odd and periodic in h") {
    for (long k = 1; k <= 30; ++k) {
        for (long h = -k; h <= k; ++h) {
            CHECK(dedekind_sum(Int(-h), Int(k)) == -dedekind_sum(Int(h), Int(k)));
            CHECK(dedekind_sum(Int(h + k), Int(k)) == dedekind_sum(Int(h), Int(k)));
        }
    }
}

TEST_CASE("dedekind reciprocity on coprime pairs up to 60") {
    for (long k = 2; k <= 60; ++k) {
        for (long h = 1; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            Rat lhs = dedekind_sum(Int(h), Int(k)) + dedekind_sum(Int(k), Int(h));
            Rat rhs = make_rat(-1, 4) +
                      (make_rat(h, k) + make_rat(k, h) + make_rat(Int(1), Int(h) * Int(k))) / 12;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("negative continued fraction fixtures") {
    CHECK(negative_continued_fraction(Int(7), Int(1)).entries == std::vector<Int>{7});
    CHECK(negative_continued_fraction(Int(5), Int(4)).entries == std::vector<Int>{2, 2, 2, 2});
    CHECK(negative_continued_fraction(Int(3), Int(2)).entries == std::vector<Int>{2, 2});
    CHECK_THROWS_AS(negative_continued_fraction(Int(4), Int(2)), invalid_input);
    CHECK_THROWS_AS(negative_continued_fraction(Int(4), Int(5)), invalid_input);
    CHECK_THROWS_AS(negative_continued_fraction(Int(4), Int(0)), invalid_input);
    CHECK_THROWS_AS(negative_continued_fraction(Int(4), Int(-1)), invalid_input);
}

TEST_CASE("continued fraction round trip, entries >= 2") {
    for (long alpha = 2; alpha <= 200; ++alpha) {
        for (long omega = 1; omega < alpha; ++omega) {
            if (std::gcd(alpha, omega) != 1) continue;
            ContinuedFraction cf = negative_continued_fraction(Int(alpha), Int(omega));
            for (const Int& entry : cf.entries) CHECK(entry >= 2);
            CHECK(evaluate(cf) == make_rat(alpha, omega));
        }
    }
}
