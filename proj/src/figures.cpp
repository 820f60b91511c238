#include "rn/figures.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "rn/space.hpp"

namespace rn {

std::string fig1_csv(const RnParams& p, long long e_min, long long e_max) {
    std::ostringstream out;
    out << "literal,value,region\n";
    for (const RnNumber& x : enumerate(p, e_min, e_max, true)) {
        if (x.is_zero()) continue;
        out << format_literal(x) << ',' << format_rational(value_of(x, p))
            << ',' << x.exp().str() << '\n';
    }
    return out.str();
}

std::string fig2_csv(const RnParams& p, long long e_min, long long e_max) {
    std::vector<RnNumber> axis = enumerate(p, e_min, e_max, true);
    if (e_min > 0 || e_max < 0) {
        // The origin and axes must appear regardless of the window.
        auto zero = RnNumber::zero(p);
        auto pos = std::lower_bound(
            axis.begin(), axis.end(), zero, [&](const RnNumber& a, const RnNumber& b) {
                return compare(a, b, p) == Ordering::LT;
            });
        axis.insert(pos, zero);
    }
    std::ostringstream out;
    out << "x_literal,y_literal,x_value,y_value,singularity_class\n";
    for (const RnNumber& x : axis) {
        std::string xl = format_literal(x);
        std::string xv = format_rational(value_of(x, p));
        for (const RnNumber& y : axis) {
            SpacePoint pt{{x, y}};
            out << xl << ',' << format_literal(y) << ',' << xv << ','
                << format_rational(value_of(y, p)) << ','
                << singularity_class(pt) << '\n';
        }
    }
    return out.str();
}

std::string fig4_csv(const RnParams& p, long long e_min, long long e_max, int j) {
    if (j != 1 && j != -1)
        throw std::invalid_argument("fig4: j must be +1 or -1");
    std::vector<RnNumber> points = enumerate(p, e_min, e_max, false);
    long long shift = j * region_size(p).convert_to<long long>();
    std::ostringstream out;
    out << "series,old_index,new_index,literal,value\n";
    auto row = [&](const char* series, long long oi, long long ni,
                   const RnNumber& x) {
        out << series << ',' << oi << ',' << ni << ',' << format_literal(x)
            << ',' << format_rational(value_of(x, p)) << '\n';
    };
    for (std::size_t i = 0; i < points.size(); ++i) {
        long long oi = static_cast<long long>(i) + 1;
        row("original", oi, oi, points[i]);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        long long oi = static_cast<long long>(i) + 1;
        SpacePoint moved = scale_shift(SpacePoint{{points[i]}}, j, p);
        row("transformed", oi, oi + shift, moved.coords[0]);
    }
    // The relabel series keeps each point's original label and value and
    // records the slot it lands in: label i moves to position i + shift.
    for (std::size_t i = 0; i < points.size(); ++i) {
        long long oi = static_cast<long long>(i) + 1;
        row("relabel", oi, oi + shift, points[i]);
    }
    return out.str();
}

}  // namespace rn
