#include "rn/arith.hpp"

namespace rn {

const char* to_string(AddPath path) {
    switch (path) {
        case AddPath::Identity: return "identity";
        case AddPath::Absorption: return "absorption";
        case AddPath::Exact: return "exact";
        case AddPath::OverflowJump: return "overflow-jump";
        case AddPath::Cancellation: return "cancellation";
    }
    return "?";
}

const char* to_string(MulPath path) {
    switch (path) {
        case MulPath::Exact: return "exact";
        case MulPath::Nearest: return "nearest";
        case MulPath::TieAwayFromZero: return "tie away from zero";
    }
    return "?";
}

static void require_same_n(const RnNumber& a, const RnNumber& b,
                           const RnParams& p) {
    if (a.n() != p.n || b.n() != p.n)
        throw std::invalid_argument("rn-arith: mixed n");
}

AddResult add_n_traced(const RnNumber& a, const RnNumber& b, const RnParams& p) {
    require_same_n(a, b, p);
    ExactRational exact = value_of(a, p) + value_of(b, p);
    if (a.is_zero()) return {b, AddPath::Identity, exact};
    if (b.is_zero()) return {a, AddPath::Identity, exact};

    // Align to the larger exponent. A nonzero exponent gap shifts the
    // smaller significand right by 2n*(E - e) >= 2n bits, which discards
    // it entirely: absorption.
    if (a.exp() != b.exp()) {
        const RnNumber& big = a.exp() > b.exp() ? a : b;
        return {big, AddPath::Absorption, exact};
    }
    BigInt sa = a.negative() ? -a.sig() : a.sig();
    BigInt sb = b.negative() ? -b.sig() : b.sig();
    BigInt sum = sa + sb;
    if (sum == 0) return {RnNumber::zero(p), AddPath::Cancellation, exact};
    bool neg = sum < 0;
    BigInt mag = neg ? -sum : sum;
    BigInt full = BigInt(1) << (2 * p.n);
    if (mag >= full) {
        // mag < 2^{2n+1}, so the truncated jump always lands on 0...01.
        mag >>= 2 * p.n;
        return {RnNumber(neg, mag, a.exp() + 1, p), AddPath::OverflowJump, exact};
    }
    return {RnNumber(neg, mag, a.exp(), p), AddPath::Exact, exact};
}

RnNumber add_n(const RnNumber& a, const RnNumber& b, const RnParams& p) {
    return add_n_traced(a, b, p).value;
}

RnNumber sub_n(const RnNumber& a, const RnNumber& b, const RnParams& p) {
    return add_n(a, negate(b), p);
}

MulResult mul_n_traced(const RnNumber& a, const RnNumber& b, const RnParams& p) {
    require_same_n(a, b, p);
    ExactRational exact = value_of(a, p) * value_of(b, p);
    if (exact == 0) return {RnNumber::zero(p), MulPath::Exact, exact};
    RoundResult r = round_to_nearest_traced(exact, p);
    MulPath path = r.tie                        ? MulPath::TieAwayFromZero
                   : value_of(r.value, p) == exact ? MulPath::Exact
                                                   : MulPath::Nearest;
    return {r.value, path, exact};
}

RnNumber mul_n(const RnNumber& a, const RnNumber& b, const RnParams& p) {
    return mul_n_traced(a, b, p).value;
}

CnNumber cn_add(const CnNumber& a, const CnNumber& b, const RnParams& p) {
    return {add_n(a.re, b.re, p), add_n(a.im, b.im, p)};
}

CnNumber cn_mul(const CnNumber& a, const CnNumber& b, const RnParams& p) {
    ExactRational ar = value_of(a.re, p), ai = value_of(a.im, p);
    ExactRational br = value_of(b.re, p), bi = value_of(b.im, p);
    ExactRational re = ar * br - ai * bi;
    ExactRational im = ar * bi + ai * br;
    return {round_to_nearest(re, p), round_to_nearest(im, p)};
}

}  // namespace rn
