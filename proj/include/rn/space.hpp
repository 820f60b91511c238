#pragma once

// R_n based space and time: d-dimensional lattice points (d in {1,2,3}),
// the componentwise order transforms F_< / F_>, scale shifts, the
// magnitude expansion/contraction maps, singularity classification,
// nearest-neighbor queries and the epsilon start-time device. Zero
// coordinates are fixed points of every transform; the origin never moves.

#include <optional>
#include <utility>
#include <vector>

#include "rn/number.hpp"

namespace rn {

struct SpacePoint {
    std::vector<RnNumber> coords;  // size d in {1, 2, 3}, shared n

    bool operator==(const SpacePoint&) const = default;
};

struct TimePoint {
    RnNumber t;
};

void validate_point(const SpacePoint& x, const RnParams& p);

// Componentwise successor / predecessor; zero coordinates stay fixed.
SpacePoint F_less(const SpacePoint& x, const RnParams& p);
SpacePoint F_greater(const SpacePoint& x, const RnParams& p);

// |steps| applications of F_less (steps > 0) or F_greater (steps < 0).
SpacePoint iterate_F(const SpacePoint& x, long long steps, const RnParams& p);

// Adds j to every nonzero coordinate's exponent: rescales every embedded
// coordinate by exactly 2^{2nj}. Equals 2^{2n}-1 iterations of F on
// all-nonzero points.
SpacePoint scale_shift(const SpacePoint& x, const BigInt& j, const RnParams& p);

// Successor/predecessor applied to coordinate magnitudes with the sign
// restored: moves points away from / towards the origin on every axis.
SpacePoint expand_magnitude(const SpacePoint& x, unsigned long long steps,
                            const RnParams& p);
SpacePoint contract_magnitude(const SpacePoint& x, unsigned long long steps,
                              const RnParams& p);

// Number of zero coordinates: 0 = regular point, d = the origin.
unsigned singularity_class(const SpacePoint& x);

// One side of a coordinate's neighborhood. Zero has no nearest neighbors
// (it is the accumulation point), so both of its sides are boundaries.
struct NeighborResult {
    std::optional<RnNumber> neighbor;  // empty = AccumulationBoundary

    bool is_accumulation_boundary() const { return !neighbor.has_value(); }
};

// (predecessor side, successor side).
std::pair<NeighborResult, NeighborResult> neighbors(const RnNumber& c,
                                                    const RnParams& p);

// Smallest positive value in region e, value 2^{n(2e-1)}.
TimePoint pick_epsilon(const RnParams& p, const BigInt& e);

struct DistinguishabilityReport {
    unsigned n;
    BigInt points_per_region;        // 2^{2n} - 1
    ExactRational min_spacing_e0;    // 2^{-n}
    BigInt extent_e0_in_steps;       // 2^{2n} - 1
    unsigned long long decimal_order;  // floor(log10(2^{2n}))
    bool covers_55_decimal_orders;   // 2^{2n} >= 10^55
};

DistinguishabilityReport distinguishability_report(unsigned n);

}  // namespace rn
