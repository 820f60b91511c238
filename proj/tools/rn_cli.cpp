// rn_cli: enumeration tables, R_n / C_n arithmetic with roundoff traces,
// figure-data CSVs, measurement-hierarchy readings, invariant check
// suites and the distinguishability report.
//
// Exit codes: 0 success, 1 property failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rn/arith.hpp"
#include "rn/checks.hpp"
#include "rn/figures.hpp"
#include "rn/number.hpp"
#include "rn/space.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

struct EnumArgs {
    unsigned n = 1;
    long long e_min = 0, e_max = 0;
    bool signed_values = false;
    std::string format = "csv";
};

int run_enum(const EnumArgs& a) {
    rn::RnParams p(a.n);
    auto values = rn::enumerate(p, a.e_min, a.e_max, a.signed_values);
    if (a.format == "csv") {
        std::cout << "literal,value,exponent\n";
        for (const auto& x : values)
            std::cout << rn::format_literal(x) << ','
                      << rn::format_rational(rn::value_of(x, p)) << ','
                      << x.exp().str() << '\n';
    } else {
        for (const auto& x : values)
            std::cout << std::setw(2 * a.n + 16) << rn::format_literal(x)
                      << "  " << rn::format_rational(rn::value_of(x, p))
                      << '\n';
    }
    return kExitOk;
}

struct ArithArgs {
    std::string op, lhs, rhs;
    unsigned n = 1;
};

rn::CnNumber parse_cn(const std::string& text, const rn::RnParams& p) {
    // Complex literal: "RE+IMi", e.g. "(1.0,1)+(0.1,0)i"; a bare R_n
    // literal is a real value.
    if (!text.empty() && text.back() == 'i') {
        size_t split = text.find(")+(");
        if (split == std::string::npos)
            throw std::invalid_argument("malformed C_n literal: " + text);
        return {rn::parse_literal(text.substr(0, split + 1), p),
                rn::parse_literal(text.substr(split + 2, text.size() - split - 3), p)};
    }
    return {rn::parse_literal(text, p), rn::RnNumber::zero(p)};
}

std::string format_cn(const rn::CnNumber& z) {
    return rn::format_literal(z.re) + "+" + rn::format_literal(z.im) + "i";
}

int run_arith(const ArithArgs& a) {
    rn::RnParams p(a.n);
    if (a.op == "add" || a.op == "sub" || a.op == "mul") {
        rn::RnNumber lhs = rn::parse_literal(a.lhs, p);
        rn::RnNumber rhs = rn::parse_literal(a.rhs, p);
        if (a.op == "mul") {
            rn::MulResult r = rn::mul_n_traced(lhs, rhs, p);
            std::cout << "result: " << rn::format_literal(r.value) << '\n'
                      << "exact: " << rn::format_rational(r.exact_product) << '\n'
                      << "path: " << rn::to_string(r.path) << '\n';
        } else {
            if (a.op == "sub") rhs = rn::negate(rhs);
            rn::AddResult r = rn::add_n_traced(lhs, rhs, p);
            std::cout << "result: " << rn::format_literal(r.value) << '\n'
                      << "exact: " << rn::format_rational(r.exact_sum) << '\n'
                      << "path: " << rn::to_string(r.path) << '\n';
        }
        return kExitOk;
    }
    if (a.op == "cadd" || a.op == "cmul") {
        rn::CnNumber lhs = parse_cn(a.lhs, p);
        rn::CnNumber rhs = parse_cn(a.rhs, p);
        rn::CnNumber r = a.op == "cadd" ? rn::cn_add(lhs, rhs, p)
                                        : rn::cn_mul(lhs, rhs, p);
        rn::ExactRational lr = rn::value_of(lhs.re, p), li = rn::value_of(lhs.im, p);
        rn::ExactRational rr = rn::value_of(rhs.re, p), ri = rn::value_of(rhs.im, p);
        rn::ExactRational er, ei;
        if (a.op == "cadd") {
            er = lr + rr;
            ei = li + ri;
        } else {
            er = lr * rr - li * ri;
            ei = lr * ri + li * rr;
        }
        std::cout << "result: " << format_cn(r) << '\n'
                  << "exact: " << rn::format_rational(er) << " + "
                  << rn::format_rational(ei) << " i\n"
                  << "path: componentwise\n";
        return kExitOk;
    }
    if (a.op == "div") {
        std::cerr << "error: operation not defined in R_n\n";
        return kExitUsage;
    }
    std::cerr << "error: unknown operation \"" << a.op << "\"\n";
    return kExitUsage;
}

struct FigArgs {
    std::string which;
    unsigned n = 1;
    long long e_min = 0, e_max = 0;
    int j = 0;
    std::string out;
};

int run_fig(const FigArgs& a) {
    rn::RnParams p(a.n);
    std::string csv;
    if (a.which == "fig1") {
        csv = rn::fig1_csv(p, a.e_min, a.e_max);
    } else if (a.which == "fig2") {
        csv = rn::fig2_csv(p, a.e_min, a.e_max);
    } else if (a.which == "fig4") {
        if (a.j != 1 && a.j != -1) {
            std::cerr << "error: fig4 requires --j +1 or -1\n";
            return kExitUsage;
        }
        csv = rn::fig4_csv(p, a.e_min, a.e_max, a.j);
    } else {
        std::cerr << "error: unknown figure \"" << a.which << "\"\n";
        return kExitUsage;
    }
    if (a.out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << a.out << '\n';
            return kExitUsage;
        }
        f << csv;
        if (!f.good()) {
            std::cerr << "error: write failed for " << a.out << '\n';
            return kExitPropertyFailure;
        }
    }
    return kExitOk;
}

struct HierarchyArgs {
    std::string value;
    long long level = 0;
    unsigned n = 1;
    unsigned base = 10;
};

int run_hierarchy(const HierarchyArgs& a) {
    rn::RnParams p(a.n);
    rn::ExactRational q = rn::parse_rational(a.value);
    rn::HierarchyReading r = rn::hierarchy_reading(q, a.level, p, a.base);
    // The level unit is base^{n*level}.
    rn::BigInt scale = boost::multiprecision::pow(
        rn::BigInt(a.base), static_cast<unsigned>(p.n * std::llabs(a.level)));
    rn::ExactRational unit = a.level >= 0 ? rn::ExactRational(scale)
                                          : rn::ExactRational(1, scale);
    std::cout << "unit: " << rn::format_rational(unit) << '\n';
    switch (r.kind) {
        case rn::HierarchyReading::Kind::Nondetect:
            std::cout << "reading: nondetect\n";
            break;
        case rn::HierarchyReading::Kind::Offscale:
            std::cout << "reading: offscale\n";
            break;
        case rn::HierarchyReading::Kind::Digits:
            std::cout << "reading: " << r.digits << '\n';
            break;
    }
    return kExitOk;
}

struct CheckArgs {
    std::vector<unsigned> ns{1};
    std::vector<long long> e_range{-8, 8};
    std::string suite = "all";
};

int run_check(const CheckArgs& a) {
    long long lo = a.e_range[0], hi = a.e_range[1];
    std::vector<rn::CheckResult> results;
    auto append = [&](std::vector<rn::CheckResult> r) {
        results.insert(results.end(), r.begin(), r.end());
    };
    if (a.suite == "order" || a.suite == "all") append(rn::check_order(a.ns, lo, hi));
    if (a.suite == "arith" || a.suite == "all") append(rn::check_arith(a.ns, lo, hi));
    if (a.suite == "space" || a.suite == "all") append(rn::check_space(a.ns, lo, hi));
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass) std::cout << " [" << r.detail << "]";
        std::cout << '\n';
    }
    std::cout << (rn::all_pass(results) ? "all checks passed"
                                        : "some checks FAILED")
              << " (" << results.size() << " properties)\n";
    return rn::all_pass(results) ? kExitOk : kExitPropertyFailure;
}

int run_report(unsigned n) {
    rn::DistinguishabilityReport r = rn::distinguishability_report(n);
    std::cout << "n: " << r.n << '\n'
              << "points per region: 2^" << 2 * r.n << " - 1 = "
              << r.points_per_region.str() << '\n'
              << "minimal spacing in region 0: "
              << rn::format_rational(r.min_spacing_e0) << '\n'
              << "region-0 extent in spacing units: "
              << r.extent_e0_in_steps.str() << '\n'
              << "decimal order of 2^" << 2 * r.n << ": " << r.decimal_order
              << '\n'
              << "covers 55 decimal orders: "
              << (r.covers_55_decimal_orders ? "yes" : "no") << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-string number system R_n / C_n: enumeration, "
                 "arithmetic, space transforms, figures and checks"};
    app.require_subcommand(1);

    EnumArgs enum_args;
    auto* cmd_enum = app.add_subcommand("enum", "Emit an enumeration window");
    cmd_enum->add_option("--n", enum_args.n, "half significand width")->required();
    cmd_enum->add_option("--e-min", enum_args.e_min)->required();
    cmd_enum->add_option("--e-max", enum_args.e_max)->required();
    cmd_enum->add_flag("--signed", enum_args.signed_values,
                       "include negatives and zero");
    cmd_enum->add_option("--format", enum_args.format)
        ->check(CLI::IsMember({"csv", "table"}));

    ArithArgs arith_args;
    auto* cmd_arith =
        app.add_subcommand("arith", "Evaluate add|sub|mul|cadd|cmul on literals");
    cmd_arith->add_option("op", arith_args.op, "operation")->required();
    cmd_arith->add_option("lhs", arith_args.lhs)->required();
    cmd_arith->add_option("rhs", arith_args.rhs)->required();
    cmd_arith->add_option("--n", arith_args.n)->required();

    FigArgs fig_args;
    auto* cmd_fig = app.add_subcommand("fig", "Emit figure data CSV");
    cmd_fig->add_option("which", fig_args.which, "fig1|fig2|fig4")->required();
    cmd_fig->add_option("--n", fig_args.n)->required();
    cmd_fig->add_option("--e-min", fig_args.e_min)->required();
    cmd_fig->add_option("--e-max", fig_args.e_max)->required();
    cmd_fig->add_option("--j", fig_args.j, "fig4 scale direction (+1 or -1)");
    cmd_fig->add_option("--out", fig_args.out, "output file (default stdout)");

    HierarchyArgs h_args;
    auto* cmd_h = app.add_subcommand("hierarchy", "Instrument reading at a level");
    cmd_h->add_option("--value", h_args.value, "nonnegative rational p/q")->required();
    cmd_h->add_option("--level", h_args.level)->required();
    cmd_h->add_option("--n", h_args.n)->required();
    cmd_h->add_option("--base", h_args.base)->check(CLI::Range(2u, 36u));

    CheckArgs check_args;
    auto* cmd_check = app.add_subcommand("check", "Run invariant suites");
    cmd_check->add_option("--n", check_args.ns)->expected(-1);
    cmd_check->add_option("--e-range", check_args.e_range)->expected(2);
    cmd_check->add_option("--suite", check_args.suite)
        ->check(CLI::IsMember({"order", "arith", "space", "all"}));

    unsigned report_n = 1;
    auto* cmd_report = app.add_subcommand("report", "Distinguishability report");
    cmd_report->add_option("--n", report_n)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_enum->parsed()) return run_enum(enum_args);
        if (cmd_arith->parsed()) return run_arith(arith_args);
        if (cmd_fig->parsed()) return run_fig(fig_args);
        if (cmd_h->parsed()) return run_hierarchy(h_args);
        if (cmd_check->parsed()) return run_check(check_args);
        if (cmd_report->parsed()) return run_report(report_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPropertyFailure;
    }
    return kExitUsage;
}
