#pragma once

// R_n arithmetic. Addition uses alignment-truncation with a full-region
// overflow jump; multiplication computes the exact rational product and
// rounds once to nearest, ties away from zero. The two policies are
// deliberately different: no single rounding rule reproduces both the
// (1.0,1)+(1.0,0)=(1.0,1) and (1.1,2)x(0.1,0)=(1.0,2) identities.

#include "rn/number.hpp"

namespace rn {

struct CnNumber {
    RnNumber re;
    RnNumber im;

    bool operator==(const CnNumber&) const = default;
};

enum class AddPath {
    Identity,      // a zero operand, result is the other
    Absorption,    // cross-region alignment annihilated the smaller operand
    Exact,         // same-region sum, no overflow
    OverflowJump,  // sum magnitude reached 2^{2n}; one region jump with truncation
    Cancellation,  // opposite signs cancelled to zero
};

const char* to_string(AddPath path);

struct AddResult {
    RnNumber value;
    AddPath path;
    ExactRational exact_sum;  // pre-roundoff value of the aligned sum
};

AddResult add_n_traced(const RnNumber& a, const RnNumber& b, const RnParams& p);
RnNumber add_n(const RnNumber& a, const RnNumber& b, const RnParams& p);

RnNumber sub_n(const RnNumber& a, const RnNumber& b, const RnParams& p);

enum class MulPath {
    Exact,          // product representable, no rounding
    Nearest,        // rounded to the unique nearest value
    TieAwayFromZero,
};

const char* to_string(MulPath path);

struct MulResult {
    RnNumber value;
    MulPath path;
    ExactRational exact_product;
};

MulResult mul_n_traced(const RnNumber& a, const RnNumber& b, const RnParams& p);
RnNumber mul_n(const RnNumber& a, const RnNumber& b, const RnParams& p);

// Componentwise add_n.
CnNumber cn_add(const CnNumber& a, const CnNumber& b, const RnParams& p);

// Exact complex product, then one rounding per component.
CnNumber cn_mul(const CnNumber& a, const CnNumber& b, const RnParams& p);

}  // namespace rn
