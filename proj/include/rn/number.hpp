#pragma once

// Finite-string numbers R_n: sign, a 2n-bit significand with the binal
// point after position n, and an unbounded region exponent e. The
// embedded value is sign * sig * 2^{-n} * 2^{2n*e}. Zero is the unique
// all-zero significand with e = 0 and positive sign.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rn {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

struct RnParams {
    unsigned n = 1;  // half the significand width; significand has 2n bits

    explicit RnParams(unsigned n_) : n(n_) {
        if (n == 0) throw std::invalid_argument("RnParams: n must be >= 1");
    }
    bool operator==(const RnParams&) const = default;
};

enum class Ordering { LT, EQ, GT };

class RnNumber {
public:
    // Canonical constructor. sig is the 2n-bit integer significand,
    // 0 <= sig < 2^{2n}. An all-zero significand forces exp = 0 and
    // positive sign.
    RnNumber(bool negative, BigInt sig, BigInt exp, const RnParams& p);

    static RnNumber zero(const RnParams& p) {
        return RnNumber(false, 0, 0, p);
    }
    // Smallest positive value in region e: significand 0...01.
    static RnNumber min_in_region(BigInt exp, const RnParams& p) {
        return RnNumber(false, 1, std::move(exp), p);
    }

    bool negative() const { return negative_; }
    const BigInt& sig() const { return sig_; }
    const BigInt& exp() const { return exp_; }
    unsigned n() const { return n_; }
    bool is_zero() const { return sig_ == 0; }

    bool operator==(const RnNumber&) const = default;

private:
    bool negative_;
    BigInt sig_;
    BigInt exp_;
    unsigned n_;
};

// Thrown by successor/predecessor at zero.
struct ZeroHasNoSuccessor : std::domain_error {
    ZeroHasNoSuccessor() : std::domain_error("f_< is not defined on zero") {}
};
struct ZeroHasNoPredecessor : std::domain_error {
    ZeroHasNoPredecessor() : std::domain_error("zero is not in the range of f_>") {}
};

// 2^{2n} - 1, the number of positive values per region.
BigInt region_size(const RnParams& p);

// Exact embedded value; no rounding. Throws std::overflow_error when the
// required shift 2n*|exp| does not fit in memory.
ExactRational value_of(const RnNumber& x, const RnParams& p);

// Total order agreeing with value_of, computed structurally (works for
// exponents of any magnitude). Throws std::invalid_argument on mixed n.
Ordering compare(const RnNumber& a, const RnNumber& b, const RnParams& p);

// f_< and f_> of the standard ordering. Undefined at zero.
RnNumber successor(const RnNumber& x, const RnParams& p);
RnNumber predecessor(const RnNumber& x, const RnParams& p);

RnNumber negate(const RnNumber& x);

// All values with exp in [e_min, e_max], ascending. Negatives (and zero,
// when 0 is in range) are included only for include_negative.
std::vector<RnNumber> enumerate(const RnParams& p, long long e_min,
                                long long e_max, bool include_negative);

struct RoundResult {
    RnNumber value;
    bool tie;  // two distinct representables were equidistant
};

// Nearest representable to q over all of R_n; exact ties go away from
// zero. round_to_nearest(value_of(x)) == x.
RoundResult round_to_nearest_traced(const ExactRational& q, const RnParams& p);
RnNumber round_to_nearest(const ExactRational& q, const RnParams& p);

// Measurement-hierarchy reading for a level-j instrument with unit k^{n*j}.
struct HierarchyReading {
    enum class Kind { Nondetect, Digits, Offscale };
    Kind kind;
    std::string digits;  // exactly n base-k digits when kind == Digits

    bool operator==(const HierarchyReading&) const = default;
};

HierarchyReading hierarchy_reading(const ExactRational& q, long long level,
                                   const RnParams& p, unsigned base);

// Literal grammar: '(' ['-'] BITS '.' BITS ',' SIGNED_DECIMAL ')' with
// each BITS of length n. Zero renders as "(0...0.0...0,0)".
RnNumber parse_literal(const std::string& text, const RnParams& p);
std::string format_literal(const RnNumber& x);

// Lowest-terms rendering: bare integer when the denominator is 1,
// otherwise "p/q".
std::string format_rational(const ExactRational& q);
ExactRational parse_rational(const std::string& text);

}  // namespace rn
