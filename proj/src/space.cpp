#include "rn/space.hpp"

namespace rn {

namespace mp = boost::multiprecision;

void validate_point(const SpacePoint& x, const RnParams& p) {
    if (x.coords.empty() || x.coords.size() > 3)
        throw std::invalid_argument("SpacePoint: d must be in {1, 2, 3}");
    for (const RnNumber& c : x.coords)
        if (c.n() != p.n) throw std::invalid_argument("SpacePoint: mixed n");
}

template <typename Step>
static SpacePoint map_coords(const SpacePoint& x, const RnParams& p, Step step) {
    validate_point(x, p);
    SpacePoint out;
    out.coords.reserve(x.coords.size());
    for (const RnNumber& c : x.coords)
        out.coords.push_back(c.is_zero() ? c : step(c));
    return out;
}

SpacePoint F_less(const SpacePoint& x, const RnParams& p) {
    return map_coords(x, p, [&](const RnNumber& c) { return successor(c, p); });
}

SpacePoint F_greater(const SpacePoint& x, const RnParams& p) {
    return map_coords(x, p, [&](const RnNumber& c) { return predecessor(c, p); });
}

SpacePoint iterate_F(const SpacePoint& x, long long steps, const RnParams& p) {
    SpacePoint cur = x;
    for (long long i = 0; i < steps; ++i) cur = F_less(cur, p);
    for (long long i = 0; i > steps; --i) cur = F_greater(cur, p);
    return cur;
}

SpacePoint scale_shift(const SpacePoint& x, const BigInt& j, const RnParams& p) {
    return map_coords(x, p, [&](const RnNumber& c) {
        return RnNumber(c.negative(), c.sig(), c.exp() + j, p);
    });
}

static SpacePoint magnitude_map(const SpacePoint& x, unsigned long long steps,
                                const RnParams& p, bool outward) {
    return map_coords(x, p, [&](const RnNumber& c) {
        RnNumber mag(false, c.sig(), c.exp(), p);
        for (unsigned long long i = 0; i < steps; ++i)
            mag = outward ? successor(mag, p) : predecessor(mag, p);
        return c.negative() ? negate(mag) : mag;
    });
}

SpacePoint expand_magnitude(const SpacePoint& x, unsigned long long steps,
                            const RnParams& p) {
    return magnitude_map(x, steps, p, true);
}

SpacePoint contract_magnitude(const SpacePoint& x, unsigned long long steps,
                              const RnParams& p) {
    return magnitude_map(x, steps, p, false);
}

unsigned singularity_class(const SpacePoint& x) {
    if (x.coords.empty() || x.coords.size() > 3)
        throw std::invalid_argument("singularity_class: d must be in {1, 2, 3}");
    unsigned k = 0;
    for (const RnNumber& c : x.coords)
        if (c.is_zero()) ++k;
    return k;
}

std::pair<NeighborResult, NeighborResult> neighbors(const RnNumber& c,
                                                    const RnParams& p) {
    if (c.is_zero()) return {NeighborResult{}, NeighborResult{}};
    return {NeighborResult{predecessor(c, p)}, NeighborResult{successor(c, p)}};
}

TimePoint pick_epsilon(const RnParams& p, const BigInt& e) {
    return TimePoint{RnNumber::min_in_region(e, p)};
}

DistinguishabilityReport distinguishability_report(unsigned n) {
    if (n == 0) throw std::invalid_argument("distinguishability_report: n >= 1");
    BigInt full = BigInt(1) << (2 * n);
    DistinguishabilityReport r;
    r.n = n;
    r.points_per_region = full - 1;
    r.min_spacing_e0 = ExactRational(1, BigInt(1) << n);
    r.extent_e0_in_steps = full - 1;
    r.decimal_order = full.str().size() - 1;
    r.covers_55_decimal_orders = full >= mp::pow(BigInt(10), 55);
    return r;
}

}  // namespace rn
