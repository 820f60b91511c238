#pragma once

// Brute-force reference for ordering and rounding: exhaustive enumeration
// windows with exact rational values, linear-scan nearest search and
// sorted-list adjacency. Deliberately naive; this is the audit path the
// main implementation is judged against.

#include <cstddef>
#include <vector>

#include "rn/number.hpp"

namespace rn {

struct EnumerationWindow {
    RnParams p;
    long long e_min;
    long long e_max;
    bool is_signed;
    // Strictly ascending by rational value; every representable value in
    // the exponent range and no others.
    std::vector<std::pair<RnNumber, ExactRational>> values;
};

inline constexpr std::size_t kDefaultWindowCap = 1'000'000;

EnumerationWindow build_window(const RnParams& p, long long e_min,
                               long long e_max, bool is_signed,
                               std::size_t cap = kDefaultWindowCap);

// Linear scan minimizing |value - q|, ties away from zero. Throws
// std::out_of_range when the nearest candidate sits at a window endpoint
// (the window is too small to be authoritative).
RnNumber oracle_nearest(const ExactRational& q, const EnumerationWindow& w);

// Next element of the sorted window. Throws std::out_of_range at the
// window boundary or when x is not in the window.
RnNumber oracle_successor(const RnNumber& x, const EnumerationWindow& w);

}  // namespace rn
