#include "rn/number.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace rn {

namespace mp = boost::multiprecision;

RnNumber::RnNumber(bool negative, BigInt sig, BigInt exp, const RnParams& p)
    : negative_(negative), sig_(std::move(sig)), exp_(std::move(exp)), n_(p.n) {
    if (sig_ < 0 || sig_ >= (BigInt(1) << (2 * p.n)))
        throw std::invalid_argument("RnNumber: significand out of range for n");
    if (sig_ == 0) {
        if (exp_ != 0)
            throw std::invalid_argument("RnNumber: all-zero significand requires exp 0");
        if (negative_)
            throw std::invalid_argument("RnNumber: negative zero is unrepresentable");
    }
}

BigInt region_size(const RnParams& p) {
    return (BigInt(1) << (2 * p.n)) - 1;
}

static void require_same_n(const RnNumber& x, const RnParams& p) {
    if (x.n() != p.n)
        throw std::invalid_argument("RnNumber: mixed n");
}

// Shift amount 2n*exp - n as a machine integer; the exponent itself is
// unbounded but embedding needs an addressable shift.
static long long embed_shift(const RnNumber& x, const RnParams& p) {
    BigInt shift = BigInt(2 * p.n) * x.exp() - p.n;
    static const BigInt kCap = BigInt(1) << 30;
    if (shift > kCap || shift < -kCap)
        throw std::overflow_error("value_of: exponent too large to embed");
    return shift.convert_to<long long>();
}

ExactRational value_of(const RnNumber& x, const RnParams& p) {
    require_same_n(x, p);
    if (x.is_zero()) return 0;
    long long shift = embed_shift(x, p);
    ExactRational v;
    if (shift >= 0)
        v = ExactRational(x.sig() << static_cast<unsigned>(shift));
    else
        v = ExactRational(x.sig(), BigInt(1) << static_cast<unsigned>(-shift));
    return x.negative() ? -v : v;
}

Ordering compare(const RnNumber& a, const RnNumber& b, const RnParams& p) {
    require_same_n(a, p);
    require_same_n(b, p);
    // Regions do not overlap: positive values at exp e lie strictly below
    // every positive value at exp e+1, so (sign, exp, sig) orders exactly.
    auto cmp_magnitude = [](const RnNumber& x, const RnNumber& y) {
        if (x.exp() != y.exp()) return x.exp() < y.exp() ? -1 : 1;
        if (x.sig() != y.sig()) return x.sig() < y.sig() ? -1 : 1;
        return 0;
    };
    int sa = a.is_zero() ? 0 : (a.negative() ? -1 : 1);
    int sb = b.is_zero() ? 0 : (b.negative() ? -1 : 1);
    if (sa != sb) return sa < sb ? Ordering::LT : Ordering::GT;
    if (sa == 0) return Ordering::EQ;
    int m = cmp_magnitude(a, b);
    if (sa < 0) m = -m;
    return m < 0 ? Ordering::LT : m > 0 ? Ordering::GT : Ordering::EQ;
}

RnNumber successor(const RnNumber& x, const RnParams& p) {
    require_same_n(x, p);
    if (x.is_zero()) throw ZeroHasNoSuccessor();
    if (x.negative()) {
        RnNumber mag(false, x.sig(), x.exp(), p);
        return negate(predecessor(mag, p));
    }
    if (x.sig() == region_size(p))
        return RnNumber(false, 1, x.exp() + 1, p);
    return RnNumber(false, x.sig() + 1, x.exp(), p);
}

RnNumber predecessor(const RnNumber& x, const RnParams& p) {
    require_same_n(x, p);
    if (x.is_zero()) throw ZeroHasNoPredecessor();
    if (x.negative()) {
        RnNumber mag(false, x.sig(), x.exp(), p);
        return negate(successor(mag, p));
    }
    if (x.sig() == 1)
        return RnNumber(false, region_size(p), x.exp() - 1, p);
    return RnNumber(false, x.sig() - 1, x.exp(), p);
}

RnNumber negate(const RnNumber& x) {
    if (x.is_zero()) return x;
    RnParams p(x.n());
    return RnNumber(!x.negative(), x.sig(), x.exp(), p);
}

std::vector<RnNumber> enumerate(const RnParams& p, long long e_min,
                                long long e_max, bool include_negative) {
    if (e_min > e_max)
        throw std::invalid_argument("enumerate: empty exponent range");
    BigInt top = region_size(p);
    std::vector<RnNumber> out;
    if (include_negative) {
        for (long long e = e_max; e >= e_min; --e)
            for (BigInt s = top; s >= 1; --s)
                out.emplace_back(true, s, e, p);
        if (e_min <= 0 && 0 <= e_max) out.push_back(RnNumber::zero(p));
    }
    for (long long e = e_min; e <= e_max; ++e)
        for (BigInt s = 1; s <= top; ++s)
            out.emplace_back(false, s, e, p);
    return out;
}

// Positive step size 2^{n(2e-1)} as a rational.
static ExactRational step_size(long long e, const RnParams& p) {
    BigInt shift = BigInt(p.n) * (2 * BigInt(e) - 1);
    static const BigInt kCap = BigInt(1) << 30;
    if (shift > kCap || shift < -kCap)
        throw std::overflow_error("step size exponent too large");
    long long s = shift.convert_to<long long>();
    if (s >= 0) return ExactRational(BigInt(1) << static_cast<unsigned>(s));
    return ExactRational(1, BigInt(1) << static_cast<unsigned>(-s));
}

RoundResult round_to_nearest_traced(const ExactRational& q, const RnParams& p) {
    if (q == 0) return {RnNumber::zero(p), false};
    bool neg = q < 0;
    ExactRational a = neg ? ExactRational(-q) : q;

    // Estimate the target region from bit lengths: a is within a factor of
    // 2 of 2^L, and region e starts at 2^{n(2e-1)}.
    long long L = static_cast<long long>(mp::msb(mp::numerator(a))) -
                  static_cast<long long>(mp::msb(mp::denominator(a)));
    auto floor_div = [](long long num, long long den) {
        long long q = num / den;
        if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
        return q;
    };
    long long e0 = floor_div(L + static_cast<long long>(p.n), 2LL * p.n);
    BigInt top = region_size(p);

    // Per region, the floor and ceil of a/step (clamped into the region)
    // bracket a; the true nearest is among these across nearby regions.
    std::optional<BigInt> best_sig;
    long long best_e = 0;
    ExactRational best_val, best_dist;
    bool tie = false;
    auto consider = [&](BigInt k, long long e, const ExactRational& step) {
        k = std::max(BigInt(1), std::min(std::move(k), top));
        ExactRational cand = ExactRational(k) * step;
        ExactRational dist = cand > a ? cand - a : a - cand;
        if (!best_sig || dist < best_dist) {
            best_sig = std::move(k);
            best_e = e;
            best_val = cand;
            best_dist = dist;
            tie = false;
        } else if (dist == best_dist && cand != best_val) {
            tie = true;
            if (cand > best_val) {  // ties away from zero
                best_sig = std::move(k);
                best_e = e;
                best_val = cand;
            }
        }
    };
    for (long long e = e0 - 2; e <= e0 + 2; ++e) {
        ExactRational step = step_size(e, p);
        ExactRational m = a / step;
        BigInt k = mp::numerator(m) / mp::denominator(m);
        consider(k, e, step);
        consider(k + 1, e, step);
    }
    RnNumber mag(false, *best_sig, best_e, p);
    return {neg ? negate(mag) : mag, tie};
}

RnNumber round_to_nearest(const ExactRational& q, const RnParams& p) {
    return round_to_nearest_traced(q, p).value;
}

HierarchyReading hierarchy_reading(const ExactRational& q, long long level,
                                   const RnParams& p, unsigned base) {
    if (base < 2) throw std::invalid_argument("hierarchy_reading: base must be >= 2");
    if (q < 0) throw std::invalid_argument("hierarchy_reading: negative value");
    // Unit u_j = base^{n*j}; m = floor(q / u_j).
    BigInt pw = mp::pow(BigInt(base), static_cast<unsigned>(p.n * std::llabs(level)));
    ExactRational scaled = level >= 0 ? q / ExactRational(pw) : q * ExactRational(pw);
    BigInt m = mp::numerator(scaled) / mp::denominator(scaled);
    if (m == 0) return {HierarchyReading::Kind::Nondetect, ""};
    BigInt full = mp::pow(BigInt(base), p.n);
    if (m >= full) return {HierarchyReading::Kind::Offscale, ""};
    std::string digits(p.n, '0');
    for (unsigned i = p.n; i-- > 0 && m != 0;) {
        unsigned d = (m % base).convert_to<unsigned>();
        digits[i] = d < 10 ? char('0' + d) : char('a' + d - 10);
        m /= base;
    }
    return {HierarchyReading::Kind::Digits, digits};
}

static std::string bits_of(const BigInt& sig, unsigned width) {
    std::string s(width, '0');
    for (unsigned i = 0; i < width; ++i)
        if (mp::bit_test(sig, i)) s[width - 1 - i] = '1';
    return s;
}

std::string format_literal(const RnNumber& x) {
    std::string bits = bits_of(x.sig(), 2 * x.n());
    std::string out = "(";
    if (x.negative()) out += '-';
    out += bits.substr(0, x.n());
    out += '.';
    out += bits.substr(x.n());
    out += ',';
    out += x.exp().str();
    out += ')';
    return out;
}

RnNumber parse_literal(const std::string& text, const RnParams& p) {
    auto fail = [&](const char* why) -> RnNumber {
        throw std::invalid_argument(std::string("parse_literal: ") + why +
                                    " in \"" + text + "\"");
    };
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        fail("missing parentheses");
    std::string body = text.substr(1, text.size() - 2);
    size_t comma = body.find(',');
    if (comma == std::string::npos) fail("missing comma");
    std::string sig_part = body.substr(0, comma);
    std::string exp_part = body.substr(comma + 1);

    bool neg = false;
    if (!sig_part.empty() && sig_part[0] == '-') {
        neg = true;
        sig_part.erase(0, 1);
    }
    size_t dot = sig_part.find('.');
    if (dot == std::string::npos) fail("missing binal point");
    std::string s_bits = sig_part.substr(0, dot);
    std::string t_bits = sig_part.substr(dot + 1);
    if (s_bits.size() != p.n || t_bits.size() != p.n)
        fail("significand width does not match n");
    BigInt sig = 0;
    for (char c : s_bits + t_bits) {
        if (c != '0' && c != '1') fail("non-binary digit in significand");
        sig = (sig << 1) | (c == '1' ? 1 : 0);
    }
    if (exp_part.empty()) fail("empty exponent");
    size_t pos = exp_part[0] == '-' ? 1 : 0;
    if (pos == exp_part.size()) fail("empty exponent");
    for (size_t i = pos; i < exp_part.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(exp_part[i])))
            fail("non-decimal digit in exponent");
    BigInt exp(exp_part);
    if (sig == 0 && exp != 0) fail("all-zero significand requires exp 0");
    if (sig == 0 && neg) fail("negative zero is unrepresentable");
    return RnNumber(neg, sig, exp, p);
}

std::string format_rational(const ExactRational& q) {
    if (mp::denominator(q) == 1) return mp::numerator(q).str();
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

ExactRational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return ExactRational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("nonpositive denominator");
        return ExactRational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed \"" + text + "\"");
    }
}

}  // namespace rn
