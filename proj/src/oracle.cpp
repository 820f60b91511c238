#include "rn/oracle.hpp"

#include <algorithm>

namespace rn {

EnumerationWindow build_window(const RnParams& p, long long e_min,
                               long long e_max, bool is_signed,
                               std::size_t cap) {
    if (e_min > e_max)
        throw std::invalid_argument("build_window: empty exponent range");
    BigInt regions = BigInt(e_max) - e_min + 1;
    BigInt size = regions * region_size(p);
    if (is_signed) size = 2 * size + 1;
    if (size > cap) throw std::length_error("build_window: window exceeds cap");

    EnumerationWindow w{p, e_min, e_max, is_signed, {}};
    for (const RnNumber& x : enumerate(p, e_min, e_max, is_signed))
        w.values.emplace_back(x, value_of(x, p));
    return w;
}

RnNumber oracle_nearest(const ExactRational& q, const EnumerationWindow& w) {
    if (w.values.empty()) throw std::out_of_range("oracle_nearest: empty window");
    std::size_t best = 0;
    ExactRational best_dist;
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        const ExactRational& v = w.values[i].second;
        ExactRational dist = v > q ? v - q : q - v;
        if (i == 0 || dist < best_dist) {
            best = i;
            best_dist = dist;
        } else if (dist == best_dist) {
            // Ties away from zero.
            ExactRational bv = w.values[best].second;
            ExactRational mag_v = v < 0 ? ExactRational(-v) : v;
            ExactRational mag_b = bv < 0 ? ExactRational(-bv) : bv;
            if (mag_v > mag_b) best = i;
        }
    }
    if (best == 0 || best + 1 == w.values.size())
        throw std::out_of_range("oracle_nearest: nearest candidate at window endpoint");
    return w.values[best].first;
}

RnNumber oracle_successor(const RnNumber& x, const EnumerationWindow& w) {
    auto it = std::find_if(w.values.begin(), w.values.end(),
                           [&](const auto& e) { return e.first == x; });
    if (it == w.values.end())
        throw std::out_of_range("oracle_successor: x not in window");
    ++it;
    if (it == w.values.end())
        throw std::out_of_range("oracle_successor: x at window boundary");
    return it->first;
}

}  // namespace rn
