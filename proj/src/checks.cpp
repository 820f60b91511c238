#include "rn/checks.hpp"

#include <algorithm>
#include <cstdlib>

#include "rn/arith.hpp"
#include "rn/oracle.hpp"
#include "rn/space.hpp"

namespace rn {

namespace {

struct Suite {
    std::vector<CheckResult> results;
    std::string current;
    bool failed = false;
    std::string detail;

    void begin(std::string name) {
        current = std::move(name);
        failed = false;
        detail.clear();
    }
    void expect(bool ok, const std::string& why) {
        if (!ok && !failed) {
            failed = true;
            detail = why;
        }
    }
    void end() { results.push_back({current, !failed, detail}); }
};

std::string lit(const RnNumber& x) { return format_literal(x); }

ExactRational abs_q(const ExactRational& q) { return q < 0 ? ExactRational(-q) : q; }

void order_suite_for_n(Suite& s, unsigned n, long long e_min, long long e_max) {
    RnParams p(n);
    std::string tag = " (n=" + std::to_string(n) + ")";
    EnumerationWindow w = build_window(p, e_min, e_max, true);
    const auto& vals = w.values;

    s.begin("order/adjacency-vs-oracle" + tag);
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        const RnNumber& a = vals[i].first;
        const RnNumber& b = vals[i + 1].first;
        // The window truncates at e_min, so the two pairs straddling zero
        // are not adjacent in R_n itself.
        if (a.is_zero() || b.is_zero()) continue;
        s.expect(successor(a, p) == b, "successor(" + lit(a) + ") != " + lit(b));
        s.expect(predecessor(b, p) == a, "predecessor(" + lit(b) + ") != " + lit(a));
        s.expect(oracle_successor(a, w) == b, "oracle adjacency at " + lit(a));
    }
    s.end();

    s.begin("order/inverse-pair" + tag);
    for (const auto& [x, v] : vals) {
        if (x.is_zero()) continue;
        s.expect(predecessor(successor(x, p), p) == x, "pred(succ(" + lit(x) + "))");
        s.expect(successor(predecessor(x, p), p) == x, "succ(pred(" + lit(x) + "))");
    }
    s.end();

    s.begin("order/negation-symmetry" + tag);
    for (const auto& [x, v] : vals) {
        if (x.is_zero() || x.negative()) continue;
        s.expect(successor(negate(x), p) == negate(predecessor(x, p)),
                 "succ(-x) != -pred(x) at x=" + lit(x));
    }
    s.end();

    s.begin("order/step-structure" + tag);
    BigInt top = region_size(p);
    for (long long e = e_min; e <= e_max; ++e) {
        RnNumber first = RnNumber::min_in_region(e, p);
        ExactRational step = value_of(successor(first, p), p) - value_of(first, p);
        ExactRational expected =
            value_of(RnNumber::min_in_region(e, p), p);  // 2^{n(2e-1)}
        s.expect(step == expected, "step size at e=" + std::to_string(e));
        RnNumber cur = first;
        for (BigInt k = 1; k < top; ++k) {
            RnNumber nxt = successor(cur, p);
            s.expect(value_of(nxt, p) - value_of(cur, p) == expected,
                     "non-constant step at e=" + std::to_string(e));
            cur = nxt;
        }
        if (e < e_max) {
            // Cross-jump: last of region e to first of region e+1.
            RnNumber last(false, top, e, p);
            RnNumber next_first = RnNumber::min_in_region(e + 1, p);
            ExactRational full = ExactRational(BigInt(1) << (2 * n));
            s.expect(value_of(next_first, p) / value_of(last, p) ==
                         full / ExactRational(top),
                     "cross-jump value ratio at e=" + std::to_string(e));
            ExactRational next_step = value_of(successor(next_first, p), p) -
                                      value_of(next_first, p);
            s.expect(next_step / expected == full,
                     "jump step ratio at e=" + std::to_string(e));
        }
    }
    s.end();

    s.begin("order/value-injective-ascending" + tag);
    for (std::size_t i = 0; i + 1 < vals.size(); ++i)
        s.expect(vals[i].second < vals[i + 1].second,
                 "not strictly ascending at index " + std::to_string(i));
    s.end();

    s.begin("order/round-trip" + tag);
    for (const auto& [x, v] : vals) {
        s.expect(round_to_nearest(v, p) == x, "round(value(" + lit(x) + "))");
        s.expect(parse_literal(format_literal(x), p) == x,
                 "parse(format(" + lit(x) + "))");
    }
    s.end();

    s.begin("order/round-vs-oracle" + tag);
    // Interior midpoints and off-center probes. Pairs straddling zero are
    // skipped: zero is an accumulation point, so the gap between it and
    // the smallest window value holds representables no finite window
    // covers, which violates the oracle's precondition.
    for (std::size_t i = 1; i + 2 < vals.size(); ++i) {
        if (vals[i].first.is_zero() || vals[i + 1].first.is_zero()) continue;
        ExactRational lo = vals[i].second, hi = vals[i + 1].second;
        std::vector<ExactRational> probes = {ExactRational((lo + hi) / 2),
                                             ExactRational(lo + (hi - lo) / 3),
                                             ExactRational(lo + (hi - lo) * 2 / 3)};
        for (const auto& q : probes) {
            s.expect(round_to_nearest(q, p) == oracle_nearest(q, w),
                     "round mismatch at q=" + format_rational(q));
        }
    }
    s.end();

    s.begin("order/hierarchy-consistency" + tag);
    unsigned base = 10;
    std::size_t samples = 0;
    for (int i = 1; samples < 1000; ++i) {
        ExactRational q(BigInt(i) * i + 7, BigInt(3 * i + 1));
        for (long long j = -2; j <= 2; ++j) {
            ++samples;
            HierarchyReading r = hierarchy_reading(q, j, p, base);
            if (r.kind == HierarchyReading::Kind::Offscale) {
                HierarchyReading up = hierarchy_reading(q, j + 1, p, base);
                s.expect(up.kind != HierarchyReading::Kind::Nondetect,
                         "offscale at level " + std::to_string(j) +
                             " but nondetect above, q=" + format_rational(q));
            }
        }
    }
    // Boundary: the smallest offscale value at level j (k^n units) reads
    // 0...01, detect, at level j+1.
    for (long long j = -2; j <= 2; ++j) {
        BigInt kn = boost::multiprecision::pow(BigInt(base), n);
        BigInt unit_scale = boost::multiprecision::pow(
            BigInt(base), static_cast<unsigned>(n * std::abs(j)));
        ExactRational unit =
            j >= 0 ? ExactRational(unit_scale) : ExactRational(1, unit_scale);
        ExactRational just_offscale = ExactRational(kn) * unit;
        s.expect(hierarchy_reading(just_offscale, j, p, base).kind ==
                     HierarchyReading::Kind::Offscale,
                 "k^n units should be offscale at its own level");
        HierarchyReading up = hierarchy_reading(just_offscale, j + 1, p, base);
        std::string detect(n, '0');
        detect.back() = '1';
        s.expect(up.kind == HierarchyReading::Kind::Digits && up.digits == detect,
                 "just-offscale should read detect one level up");
    }
    s.end();
}

}  // namespace

std::vector<CheckResult> check_order(const std::vector<unsigned>& ns,
                                     long long e_min, long long e_max) {
    Suite s;
    for (unsigned n : ns) order_suite_for_n(s, n, e_min, e_max);
    return std::move(s.results);
}

std::vector<CheckResult> check_arith(const std::vector<unsigned>& ns,
                                     long long e_min, long long e_max) {
    Suite s;
    for (unsigned n : ns) {
        RnParams p(n);
        std::string tag = " (n=" + std::to_string(n) + ")";
        // The arithmetic sweeps are quadratic in window size; keep them at
        // the exhaustive-but-small ranges they are specified for.
        long long a_min = std::max(e_min, -4LL), a_max = std::min(e_max, 4LL);
        EnumerationWindow w = build_window(p, a_min, a_max, true);
        const auto& vals = w.values;

        s.begin("arith/absorption" + tag);
        for (const auto& [a, va] : vals) {
            if (a.is_zero() || a.negative()) continue;
            for (const auto& [b, vb] : vals) {
                if (b.is_zero() || b.negative()) continue;
                if (a.exp() > b.exp())
                    s.expect(add_n(a, b, p) == a,
                             lit(a) + " + " + lit(b) + " != " + lit(a));
            }
        }
        s.end();

        s.begin("arith/add-commutative" + tag);
        for (const auto& [a, va] : vals)
            for (const auto& [b, vb] : vals)
                s.expect(add_n(a, b, p) == add_n(b, a, p),
                         "add not symmetric at " + lit(a) + ", " + lit(b));
        s.end();

        s.begin("arith/add-bounded-error" + tag);
        for (const auto& [a, va] : vals) {
            for (const auto& [b, vb] : vals) {
                // Opposite-sign cross-region pairs are excluded: alignment
                // truncation annihilates the small operand there, and the
                // exact sum can sit several grid points below the absorbed
                // result (e.g. 2 + (-3/2): result 2, exact 1/2, with 3/2
                // and 1 in between).
                if (a.negative() != b.negative() && a.exp() != b.exp() &&
                    !a.is_zero() && !b.is_zero())
                    continue;
                ExactRational exact = va + vb;
                RnNumber v = add_n(a, b, p);
                ExactRational rv = value_of(v, p);
                if (rv == exact) continue;
                s.expect(!v.is_zero(), "zero result for nonzero exact sum");
                if (v.is_zero()) continue;
                if (rv < exact)
                    s.expect(value_of(successor(v, p), p) >= exact,
                             "representable strictly between result and sum");
                else
                    s.expect(value_of(predecessor(v, p), p) <= exact,
                             "representable strictly between result and sum");
            }
        }
        s.end();

        s.begin("arith/sign-rules" + tag);
        for (const auto& [a, va] : vals) {
            s.expect(add_n(a, negate(a), p) == RnNumber::zero(p),
                     "x + (-x) != 0 at " + lit(a));
            for (const auto& [b, vb] : vals) {
                RnNumber m = mul_n(a, b, p);
                if (a.is_zero() || b.is_zero())
                    s.expect(m.is_zero(), "x*0 != 0");
                else if (!m.is_zero())
                    s.expect(m.negative() == (a.negative() != b.negative()),
                             "sign rule at " + lit(a) + " * " + lit(b));
            }
        }
        s.end();

        s.begin("arith/mul-vs-oracle" + tag);
        // Oracle window wide enough that every product's neighborhood is
        // interior.
        long long m_min = std::max(e_min, -3LL), m_max = std::min(e_max, 3LL);
        EnumerationWindow operands = build_window(p, m_min, m_max, true);
        EnumerationWindow wide =
            build_window(p, 2 * m_min - 3, 2 * m_max + 3, true);
        // Exhaustive at n=1; sampled for larger n, where the linear-scan
        // oracle over the widened window dominates the runtime.
        std::size_t mul_stride =
            n == 1 ? 1 : std::max<std::size_t>(1, operands.values.size() / 40);
        for (std::size_t i = 0; i < operands.values.size(); i += mul_stride) {
            const auto& [a, va] = operands.values[i];
            if (a.is_zero() || a.negative()) continue;
            for (std::size_t k = 0; k < operands.values.size(); k += mul_stride) {
                const auto& [b, vb] = operands.values[k];
                if (b.is_zero() || b.negative()) continue;
                s.expect(mul_n(a, b, p) == oracle_nearest(va * vb, wide),
                         "mul mismatch at " + lit(a) + " * " + lit(b));
            }
        }
        s.end();

        s.begin("arith/cn-single-rounding" + tag);
        std::size_t stride = vals.size() > 12 ? vals.size() / 12 : 1;
        for (std::size_t i = 0; i < vals.size(); i += stride) {
            for (std::size_t j = 0; j < vals.size(); j += stride) {
                CnNumber x{vals[i].first, vals[j].first};
                CnNumber y{vals[j].first, vals[i].first};
                CnNumber z = cn_mul(x, y, p);
                ExactRational xr = vals[i].second, xi = vals[j].second;
                ExactRational yr = vals[j].second, yi = vals[i].second;
                s.expect(z.re == round_to_nearest(xr * yr - xi * yi, p),
                         "cn_mul re double-rounded");
                s.expect(z.im == round_to_nearest(xr * yi + xi * yr, p),
                         "cn_mul im double-rounded");
            }
        }
        s.end();
    }

    // Negative control pinning the policy split: nearest-rounding of the
    // paper's exact addition sum 5 ties 4-vs-6 and goes away from zero,
    // while alignment-truncation addition yields 4.
    s.begin("arith/policy-split-control (n=1)");
    {
        RnParams p1(1);
        RoundResult r = round_to_nearest_traced(5, p1);
        s.expect(r.tie, "5 should tie between 4 and 6");
        s.expect(value_of(r.value, p1) == 6, "tie should resolve to 6");
        RnNumber four = parse_literal("(1.0,1)", p1);
        RnNumber one = parse_literal("(1.0,0)", p1);
        s.expect(add_n(four, one, p1) == four, "(1.0,1)+(1.0,0) != (1.0,1)");
    }
    s.end();
    return std::move(s.results);
}

std::vector<CheckResult> check_space(const std::vector<unsigned>& ns,
                                     long long e_min, long long e_max) {
    Suite s;
    for (unsigned n : ns) {
        RnParams p(n);
        std::string tag = " (n=" + std::to_string(n) + ")";
        EnumerationWindow w = build_window(p, e_min, e_max, true);
        const auto& vals = w.values;
        long long jumps_per_region = region_size(p).convert_to<long long>();

        s.begin("space/order-embedding" + tag);
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = 0; j < vals.size(); ++j) {
                Ordering c = compare(vals[i].first, vals[j].first, p);
                Ordering e = vals[i].second < vals[j].second   ? Ordering::LT
                             : vals[i].second > vals[j].second ? Ordering::GT
                                                               : Ordering::EQ;
                s.expect(c == e, "compare disagrees with embedding");
            }
        s.end();

        s.begin("space/inverse-transforms" + tag);
        for (const auto& [x, v] : vals) {
            if (x.is_zero()) continue;
            SpacePoint pt{{x}};
            s.expect(F_greater(F_less(pt, p), p) == pt,
                     "1d F_> o F_< != id at " + lit(x));
        }
        std::size_t stride = vals.size() > 16 ? vals.size() / 16 : 1;
        for (std::size_t i = 0; i < vals.size(); i += stride)
            for (std::size_t j = 0; j < vals.size(); j += stride) {
                if (vals[i].first.is_zero() || vals[j].first.is_zero()) continue;
                SpacePoint pt{{vals[i].first, vals[j].first}};
                s.expect(F_greater(F_less(pt, p), p) == pt, "2d F_> o F_< != id");
            }
        s.end();

        s.begin("space/scale-jump-identity" + tag);
        for (const auto& [x, v] : vals) {
            if (x.is_zero()) continue;
            SpacePoint pt{{x}};
            // The order maps realize the jump identity on positive
            // coordinates; on negatives they run the other way, and the
            // magnitude maps carry the identity to both signs.
            if (!x.negative()) {
                s.expect(iterate_F(pt, jumps_per_region, p) ==
                             scale_shift(pt, 1, p),
                         "F^(2^2n-1) != scale_shift(+1) at " + lit(x));
                s.expect(iterate_F(pt, -jumps_per_region, p) ==
                             scale_shift(pt, -1, p),
                         "F^-(2^2n-1) != scale_shift(-1) at " + lit(x));
            }
            auto steps = static_cast<unsigned long long>(jumps_per_region);
            s.expect(expand_magnitude(pt, steps, p) == scale_shift(pt, 1, p),
                     "expand^(2^2n-1) != scale_shift(+1) at " + lit(x));
            s.expect(contract_magnitude(pt, steps, p) == scale_shift(pt, -1, p),
                     "contract^(2^2n-1) != scale_shift(-1) at " + lit(x));
        }
        s.end();

        s.begin("space/scale-invariance" + tag);
        for (const auto& [x, v] : vals) {
            if (x.is_zero()) continue;
            SpacePoint pt{{x}};
            for (long long j = -5; j <= 5; ++j) {
                ExactRational factor;
                if (j >= 0)
                    factor = ExactRational(BigInt(1) << unsigned(2 * n * j));
                else
                    factor = ExactRational(1, BigInt(1) << unsigned(-2 * n * j));
                s.expect(value_of(scale_shift(pt, j, p).coords[0], p) ==
                             factor * v,
                         "scale_shift(" + std::to_string(j) + ") at " + lit(x));
            }
        }
        s.end();

        s.begin("space/translation-jump-ratio" + tag);
        {
            // A walk of 2^{2n} steps from a region minimum crosses exactly
            // one jump: 2^{2n}-1 translations per jump.
            RnNumber cur = RnNumber::min_in_region(0, p);
            int jumps = 0;
            for (long long i = 0; i < jumps_per_region + 1; ++i) {
                RnNumber nxt = successor(cur, p);
                if (nxt.exp() != cur.exp()) ++jumps;
                cur = nxt;
            }
            s.expect(jumps == 1, "walk of 2^2n steps crossed " +
                                     std::to_string(jumps) + " jumps");
        }
        s.end();

        s.begin("space/expansion-monotone" + tag);
        for (const auto& [x, v] : vals) {
            SpacePoint pt{{x}};
            SpacePoint up = expand_magnitude(pt, 1, p);
            SpacePoint down = contract_magnitude(pt, 1, p);
            if (x.is_zero()) {
                s.expect(up == pt && down == pt, "zero moved");
                continue;
            }
            s.expect(abs_q(value_of(up.coords[0], p)) > abs_q(v),
                     "expand did not grow |" + lit(x) + "|");
            s.expect(abs_q(value_of(down.coords[0], p)) < abs_q(v),
                     "contract did not shrink |" + lit(x) + "|");
            s.expect(!down.coords[0].is_zero(), "contract produced zero");
        }
        s.end();

        s.begin("space/singularity-census-2d" + tag);
        {
            std::size_t class2 = 0;
            for (const auto& [x, vx] : vals)
                for (const auto& [y, vy] : vals) {
                    SpacePoint pt{{x, y}};
                    unsigned k = singularity_class(pt);
                    unsigned expected = (x.is_zero() ? 1 : 0) + (y.is_zero() ? 1 : 0);
                    s.expect(k == expected, "class mismatch off/on axes");
                    if (k == 2) ++class2;
                }
            s.expect(class2 == 1, "expected exactly one 2d singularity");
        }
        s.end();

        s.begin("space/fixed-origin" + tag);
        {
            SpacePoint origin{{RnNumber::zero(p), RnNumber::zero(p)}};
            s.expect(iterate_F(origin, 7, p) == origin, "origin moved under F_<");
            s.expect(iterate_F(origin, -7, p) == origin, "origin moved under F_>");
            s.expect(scale_shift(origin, 3, p) == origin, "origin moved under scale");
            s.expect(expand_magnitude(origin, 2, p) == origin, "origin expanded");
        }
        s.end();
    }
    return std::move(s.results);
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace rn
