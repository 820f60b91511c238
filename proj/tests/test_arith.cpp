#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rn/arith.hpp"
#include "rn/checks.hpp"
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

TEST_CASE("addition reproduces (1.0,1)+(1.0,0)=(1.0,1)") {
    AddResult r = add_n_traced(lit("(1.0,1)"), lit("(1.0,0)"), p1);
    CHECK(r.value == lit("(1.0,1)"));
    CHECK(r.path == AddPath::Absorption);
    CHECK(r.exact_sum == q(5));
}

TEST_CASE("addition identity, overflow jump and cancellation") {
    RnNumber x = lit("(1.1,-2)");
    CHECK(add_n(x, RnNumber::zero(p1), p1) == x);
    CHECK(add_n(RnNumber::zero(p1), x, p1) == x);

    // 1.5 + 1.5 = 3.0 overflows the region; the truncated jump lands on 2.
    AddResult r = add_n_traced(lit("(1.1,0)"), lit("(1.1,0)"), p1);
    CHECK(r.value == lit("(0.1,1)"));
    CHECK(r.path == AddPath::OverflowJump);
    CHECK(value_of(r.value, p1) == q(2));

    CHECK(add_n(x, negate(x), p1) == RnNumber::zero(p1));
    CHECK(add_n_traced(x, negate(x), p1).path == AddPath::Cancellation);
}

TEST_CASE("subtraction") {
    RnNumber x = lit("(1.1,3)");
    CHECK(sub_n(x, x, p1) == RnNumber::zero(p1));
    CHECK(sub_n(lit("(1.0,0)"), lit("(0.1,0)"), p1) == lit("(0.1,0)"));
    CHECK(sub_n(lit("(1.0,1)"), lit("(1.0,0)"), p1) == lit("(1.0,1)"));
    for (const auto& [a, va] : build_window(p1, -2, 2, true).values)
        for (const auto& [b, vb] : build_window(p1, -2, 2, true).values)
            CHECK(sub_n(a, b, p1) == add_n(a, negate(b), p1));
}

TEST_CASE("multiplication reproduces (1.1,2)x(0.1,0)=(1.0,2)") {
    MulResult r = mul_n_traced(lit("(1.1,2)"), lit("(0.1,0)"), p1);
    CHECK(r.value == lit("(1.0,2)"));
    CHECK(value_of(r.value, p1) == q(16));
    CHECK(r.exact_product == q(12));
    CHECK(r.path == MulPath::TieAwayFromZero);
}

TEST_CASE("multiplication rounds the exact product once") {
    CHECK(mul_n(lit("(1.1,5)"), RnNumber::zero(p1), p1) == RnNumber::zero(p1));
    // 1.5 * 1.5 = 2.25; nearest representables are 2 and 4, 2 wins.
    MulResult r = mul_n_traced(lit("(1.1,0)"), lit("(1.1,0)"), p1);
    CHECK(r.value == lit("(0.1,1)"));
    CHECK(r.exact_product == q(9, 4));
    CHECK(r.path == MulPath::Nearest);
    // Exactly representable products take the exact path.
    CHECK(mul_n_traced(lit("(1.0,0)"), lit("(0.1,0)"), p1).path == MulPath::Exact);
}

TEST_CASE("multiplication agrees with the linear-scan oracle") {
    EnumerationWindow ops = build_window(p1, -4, 4, false);
    EnumerationWindow wide = build_window(p1, -11, 11, true);
    REQUIRE(ops.values.size() == 27);
    for (const auto& [a, va] : ops.values)
        for (const auto& [b, vb] : ops.values)
            CHECK(mul_n(a, b, p1) == oracle_nearest(va * vb, wide));
}

TEST_CASE("C_n addition is componentwise") {
    CnNumber a{lit("(1.0,1)"), RnNumber::zero(p1)};
    CnNumber b{lit("(1.0,0)"), RnNumber::zero(p1)};
    CHECK(cn_add(a, b, p1) == CnNumber{lit("(1.0,1)"), RnNumber::zero(p1)});

    CnNumber zero_c{RnNumber::zero(p1), RnNumber::zero(p1)};
    CHECK(cn_add(a, zero_c, p1) == a);

    CnNumber half_i{RnNumber::zero(p1), lit("(0.1,0)")};
    CHECK(cn_add(half_i, half_i, p1) ==
          CnNumber{RnNumber::zero(p1), lit("(1.0,0)")});
}

TEST_CASE("C_n multiplication: i*i = -1/4 exactly for half-unit i") {
    // (0 + 1/2 i)^2 = -1/4 + 0i; -1/4 is representable as (-1.0,-1).
    CnNumber half_i{RnNumber::zero(p1), lit("(0.1,0)")};
    CnNumber r = cn_mul(half_i, half_i, p1);
    CHECK(value_of(r.re, p1) == q(-1, 4));
    CHECK(r.re == lit("(-1.0,-1)"));
    CHECK(r.im == RnNumber::zero(p1));

    CnNumber one_c{lit("(1.0,0)"), RnNumber::zero(p1)};
    CnNumber a{lit("(1.1,2)"), lit("(0.1,-1)")};
    CHECK(cn_mul(a, one_c, p1) == a);

    CnNumber paper_lhs{lit("(1.1,2)"), RnNumber::zero(p1)};
    CnNumber paper_rhs{lit("(0.1,0)"), RnNumber::zero(p1)};
    CHECK(cn_mul(paper_lhs, paper_rhs, p1) ==
          CnNumber{lit("(1.0,2)"), RnNumber::zero(p1)});
}

TEST_CASE("mixed n is rejected") {
    RnParams p2(2);
    RnNumber fine = lit("(01.10,0)", p2);
    CHECK_THROWS_AS(add_n(fine, lit("(1.0,0)"), p2), std::invalid_argument);
    CHECK_THROWS_AS(mul_n(lit("(1.0,0)"), fine, p2), std::invalid_argument);
}

TEST_CASE("arith property suite passes") {
    auto results = check_arith({1}, -8, 8);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}
