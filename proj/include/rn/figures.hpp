#pragma once

// CSV figure data: 1d tick positions, the 2d grid with singularity
// classes, and the scale-transformation relabel map. Emitters return the
// full CSV as a string; output is deterministic for fixed flags.

#include <string>

#include "rn/number.hpp"

namespace rn {

// Header: literal,value,region. Both signs, ascending; zero is the
// accumulation point, not a tick, and is omitted.
std::string fig1_csv(const RnParams& p, long long e_min, long long e_max);

// Header: x_literal,y_literal,x_value,y_value,singularity_class. Grid of
// signed values plus zero; rows ascending by (x, y).
std::string fig2_csv(const RnParams& p, long long e_min, long long e_max);

// Header: series,old_index,new_index,literal,value. Positive window
// points indexed from 1 ascending; j in {+1, -1} shifts every index by
// j*(2^{2n}-1), the source/sink motion of the origin.
std::string fig4_csv(const RnParams& p, long long e_min, long long e_max, int j);

}  // namespace rn
