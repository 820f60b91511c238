#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rn/checks.hpp"
#include "rn/number.hpp"
#include "rn/oracle.hpp"

using namespace rn;

namespace {
const RnParams p1(1);
RnNumber lit(const char* text, const RnParams& p = p1) {
    return parse_literal(text, p);
}
ExactRational q(long long num, long long den = 1) {
    return ExactRational(num, den);
}
}  // namespace

TEST_CASE("value_of") {
    CHECK(value_of(lit("(1.0,0)"), p1) == q(1));
    CHECK(value_of(lit("(0.0,0)"), p1) == q(0));
    CHECK(value_of(lit("(1.1,2)"), p1) == q(24));  // 1.5 * 2^4
    CHECK(value_of(lit("(0.1,0)"), p1) == q(1, 2));
    CHECK(value_of(lit("(-1.1,-1)"), p1) == q(-3, 8));
}

TEST_CASE("canonical form is enforced at construction") {
    CHECK_THROWS_AS(RnNumber(false, 0, 3, p1), std::invalid_argument);
    CHECK_THROWS_AS(RnNumber(true, 0, 0, p1), std::invalid_argument);
    CHECK_THROWS_AS(RnNumber(false, 4, 0, p1), std::invalid_argument);  // 2 bits max
    CHECK_THROWS_AS(RnNumber(false, -1, 0, p1), std::invalid_argument);
}

TEST_CASE("compare agrees with the embedding and rejects mixed n") {
    CHECK(compare(lit("(0.1,1)"), lit("(1.1,0)"), p1) == Ordering::GT);  // 2 > 1.5
    RnNumber x = lit("(1.0,5)");
    CHECK(compare(x, x, p1) == Ordering::EQ);
    CHECK(compare(lit("(-0.1,0)"), lit("(0.0,0)"), p1) == Ordering::LT);
    RnParams p2(2);
    CHECK_THROWS_AS(compare(lit("(01.10,0)", p2), lit("(1.0,0)"), p2),
                    std::invalid_argument);
}

TEST_CASE("compare works at exponents far beyond the embeddable range") {
    BigInt huge = BigInt(1) << 200;
    RnNumber a(false, 1, huge, p1);
    RnNumber b(false, 3, huge - 1, p1);
    CHECK(compare(a, b, p1) == Ordering::GT);
    CHECK_THROWS_AS(value_of(a, p1), std::overflow_error);
}

TEST_CASE("successor steps and jumps") {
    CHECK(successor(lit("(1.1,7)"), p1) == lit("(0.1,8)"));  // jump
    CHECK(successor(lit("(0.1,0)"), p1) == lit("(1.0,0)"));  // 1/2 -> 1
    CHECK(successor(lit("(-0.1,0)"), p1) == lit("(-1.1,-1)"));  // -1/2 -> -3/8
    CHECK_THROWS_AS(successor(RnNumber::zero(p1), p1), ZeroHasNoSuccessor);
}

TEST_CASE("predecessor inverts successor") {
    CHECK(predecessor(lit("(0.1,3)"), p1) == lit("(1.1,2)"));
    CHECK(predecessor(lit("(0.1,0)"), p1) == lit("(1.1,-1)"));  // 1/2 -> 3/8
    CHECK_THROWS_AS(predecessor(RnNumber::zero(p1), p1), ZeroHasNoPredecessor);
    for (const auto& [x, v] : build_window(p1, -3, 3, true).values) {
        if (x.is_zero()) continue;
        CHECK(predecessor(successor(x, p1), p1) == x);
        CHECK(successor(predecessor(x, p1), p1) == x);
    }
}

TEST_CASE("negate") {
    CHECK(negate(lit("(1.0,0)")) == lit("(-1.0,0)"));
    CHECK(negate(RnNumber::zero(p1)) == RnNumber::zero(p1));
    RnNumber x = lit("(-1.1,4)");
    CHECK(negate(negate(x)) == x);
}

TEST_CASE("enumerate") {
    RnParams p2(2);
    auto vals = enumerate(p1, -1, 1, false);
    REQUIRE(vals.size() == 9);
    std::vector<ExactRational> expected = {q(1, 8), q(2, 8), q(3, 8),
                                           q(1, 2), q(1),    q(3, 2),
                                           q(2),    q(4),    q(6)};
    for (std::size_t i = 0; i < 9; ++i)
        CHECK(value_of(vals[i], p1) == expected[i]);

    auto region0 = enumerate(p1, 0, 0, false);
    REQUIRE(region0.size() == 3);
    CHECK(value_of(region0[0], p1) == q(1, 2));
    CHECK(value_of(region0[2], p1) == q(3, 2));

    CHECK(enumerate(p2, 0, 0, false).size() == 15);  // 2^4 - 1
    CHECK_THROWS_AS(enumerate(p1, 2, 1, false), std::invalid_argument);
}

TEST_CASE("round_to_nearest") {
    // The paper's multiplication example forces the exact product 12 to
    // tie between 8 and 16 and round away from zero.
    RoundResult r = round_to_nearest_traced(q(12), p1);
    CHECK(r.tie);
    CHECK(r.value == lit("(1.0,2)"));
    CHECK(value_of(r.value, p1) == q(16));

    CHECK(round_to_nearest(q(1, 2), p1) == lit("(0.1,0)"));
    CHECK(round_to_nearest(q(5, 16), p1) == lit("(1.1,-1)"));  // 3/8 beats 1/4
    CHECK(round_to_nearest(q(0), p1) == RnNumber::zero(p1));
    CHECK(round_to_nearest(q(-12), p1) == lit("(-1.0,2)"));
}

TEST_CASE("round_to_nearest is a retraction onto R_n") {
    for (unsigned n : {1u, 2u}) {
        RnParams p(n);
        for (const auto& [x, v] : build_window(p, -4, 4, true).values)
            CHECK(round_to_nearest(v, p) == x);
    }
}

TEST_CASE("hierarchy_reading: the n=2 decimal ruler") {
    RnParams p2(2);
    // Level -1 has unit 10^{-2} = 1 cm on a meter stick.
    auto r = hierarchy_reading(q(57, 100), -1, p2, 10);
    CHECK(r.kind == HierarchyReading::Kind::Digits);
    CHECK(r.digits == "57");

    CHECK(hierarchy_reading(q(3, 1000), -1, p2, 10).kind ==
          HierarchyReading::Kind::Nondetect);
    CHECK(hierarchy_reading(q(123, 100), -1, p2, 10).kind ==
          HierarchyReading::Kind::Offscale);
    auto up = hierarchy_reading(q(123, 100), 0, p2, 10);
    CHECK(up.kind == HierarchyReading::Kind::Digits);
    CHECK(up.digits == "01");

    CHECK_THROWS_AS(hierarchy_reading(q(-1), 0, p2, 10), std::invalid_argument);
}

TEST_CASE("literal parsing and formatting") {
    CHECK(lit("(1.0,1)") == RnNumber(false, 2, 1, p1));
    CHECK(lit("(0.0,0)") == RnNumber::zero(p1));
    CHECK(format_literal(RnNumber::zero(p1)) == "(0.0,0)");
    RnParams p2(2);
    CHECK(format_literal(RnNumber(true, 6, -3, p2)) == "(-01.10,-3)");

    CHECK_THROWS_AS(lit("(0.0,3)"), std::invalid_argument);
    CHECK_THROWS_AS(lit("(-0.0,0)"), std::invalid_argument);
    CHECK_THROWS_AS(lit("(10.0,0)"), std::invalid_argument);  // width mismatch
    CHECK_THROWS_AS(lit("1.0,0"), std::invalid_argument);
    CHECK_THROWS_AS(lit("(1.2,0)"), std::invalid_argument);
    CHECK_THROWS_AS(lit("(1.0,)"), std::invalid_argument);

    for (const auto& [x, v] : build_window(p2, -2, 2, true).values)
        CHECK(parse_literal(format_literal(x), p2) == x);
}

TEST_CASE("order property suite passes exhaustively for n in {1,2}") {
    auto results = check_order({1, 2}, -8, 8);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}
