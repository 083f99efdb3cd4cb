#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verification check
// failed, 2 usage or domain error (one-line diagnostic on the error stream).

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcb/distortion_bounds.hpp"
#include "qcb/metrics.hpp"
#include "qcb/ring_invariants.hpp"
#include "qcb/special_functions.hpp"
#include "qcb/verification.hpp"

namespace qcb::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    double tolerance = default_inverse_tolerance;
    std::optional<std::string> output;
    int precision = 15;
};

/// Named numeric flags shared by `eval` and `bound`.
struct Args {
    std::map<std::string, double> values;
    std::optional<int> n;

    [[nodiscard]] double get(const std::string& name, const std::string& ctx) const
    {
        auto it = values.find(name);
        if (it == values.end()) throw usage_error(ctx + ": missing --" + name);
        return it->second;
    }
    [[nodiscard]] double get_or(const std::string& name, double fallback) const
    {
        auto it = values.find(name);
        return it == values.end() ? fallback : it->second;
    }
    [[nodiscard]] int dim() const { return n.value_or(2); }
};

using Value = std::variant<double, RealInterval>;

inline std::string render(const Value& v, int precision)
{
    if (const auto* d = std::get_if<double>(&v)) return format_double(*d, precision);
    const auto& i = std::get<RealInterval>(v);
    return format_double(i.lo, precision) + "," + format_double(i.hi, precision);
}

inline Value evaluate_function(const std::string& fn, const Args& a, const CliConfig& cfg)
{
    const std::string ctx = "eval " + fn;
    const std::map<std::string, std::function<Value()>> table{
        {"agm", [&]() -> Value { return agm(a.get("a", ctx), a.get("b", ctx)); }},
        {"ellipk", [&]() -> Value { return ellipk(a.get("r", ctx)); }},
        {"mu", [&]() -> Value { return mu(a.get("r", ctx)); }},
        {"mu_derivative", [&]() -> Value { return mu_derivative(a.get("r", ctx)); }},
        {"mu_inv", [&]() -> Value { return mu_inv(a.get("y", ctx), cfg.tolerance); }},
        {"gamma2", [&]() -> Value { return gamma2(a.get("s", ctx)); }},
        {"tau2", [&]() -> Value { return tau2(a.get("t", ctx)); }},
        {"phi2", [&]() -> Value { return phi2(a.get("K", ctx), a.get("r", ctx), cfg.tolerance); }},
        {"lambda", [&]() -> Value { return lambda_bounds(a.dim()); }},
        {"phi_upper", [&]() -> Value { return phi_upper_family(a.get("K", ctx), a.dim(), a.get("r", ctx)); }},
        {"phi_lower", [&]() -> Value { return phi_lower_family(a.get("K", ctx), a.dim(), a.get("r", ctx)); }},
        {"eta", [&]() -> Value { return eta_interval(a.get("K", ctx), a.dim(), a.get("t", ctx)); }},
        {"k_threshold", [&]() -> Value { return k_threshold(a.dim()); }},
        {"h1", [&]() -> Value { return h1(a.get("t", ctx)); }},
        {"holder_c", [&]() -> Value { return holder_constants(a.dim(), a.get("K", ctx)).c_alpha; }},
        {"holder_r0", [&]() -> Value { return holder_constants(a.dim(), a.get("K", ctx)).r0; }},
    };
    auto it = table.find(fn);
    if (it == table.end()) throw usage_error("eval: unknown function '" + fn + "'");
    return it->second();
}

inline Value evaluate_bound(const std::string& name, const Args& a)
{
    const std::string ctx = "bound " + name;
    const int n = a.dim();
    auto k = [&] { return a.get("K", ctx); };
    const std::map<std::string, std::function<Value()>> table{
        {"mv", [&]() -> Value { return bound_mv(n, k()); }},
        {"vz", [&]() -> Value { return bound_vz(n, k()); }},
        {"vz_alt", [&]() -> Value { return bound_vz_alt(n, k()); }},
        {"krzyz", [&]() -> Value { return bound_krzyz(k()); }},
        {"convex_j", [&]() -> Value { return bound_convex_j(n, k(), a.get_or("s", 1.0 / 3.0)); }},
        {"convex_small_k", [&]() -> Value { return bound_convex_small_k(n, k()); }},
        {"ball_small_k", [&]() -> Value { return bound_ball_small_k(n, k()); }},
        {"bounded_domain", [&]() -> Value { return bound_bounded_domain(n, k(), a.get("diam", ctx)); }},
        {"convex_kd", [&]() -> Value { return bound_convex_kd(n, k(), a.get("U", ctx)); }},
        {"lower_k_uniform",
         [&]() -> Value {
             return lower_bound_K_uniform(n, a.get("U", ctx), a.get("s", ctx), a.get("aseev-C", ctx),
                                          a.get("k-dist", ctx));
         }},
        {"holder_m1", [&]() -> Value { return holder_constants(n, k()).m1; }},
        {"holder_m2", [&]() -> Value { return holder_constants(n, k()).m2; }},
        {"axis_fixed", [&]() -> Value { return bound_axis_fixed(n, k()); }},
        {"planar_remark", [&]() -> Value { return planar_remark_bound(k()); }},
        {"planar_uniformly_perfect", [&]() -> Value { return bound_planar_uniformly_perfect(k(), a.get("CD", ctx)); }},
        {"fv", [&]() -> Value { return mori_fv(k()); }},
        {"bv", [&]() -> Value { return mori_bv(k()); }},
        {"mori", [&]() -> Value { return mori_conjecture(k()); }},
    };
    auto it = table.find(name);
    if (it == table.end()) throw usage_error("bound: unknown bound '" + name + "'");
    return it->second();
}

inline Report run_suite(const std::string& suite, std::optional<double> tol)
{
    Report r;
    const bool all = suite == "all";
    if (!all && suite != "identities" && suite != "theorems" && suite != "metrics")
        throw usage_error("verify: unknown suite '" + suite + "'");
    if (all || suite == "identities") r.append(verify_identity_suite(tol.value_or(default_identity_tolerance)));
    if (all || suite == "theorems") r.append(verify_theorem_suite(tol.value_or(default_metric_tolerance)));
    if (all || suite == "metrics") r.append(verify_metrics_suite(tol.value_or(default_metric_tolerance)));
    return r;
}

/// Runs the CLI on `args` (program name excluded).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Distortion bounds for quasiconformal maps with identity boundary values", "qcb"};
    app.require_subcommand(1);
    CliConfig cfg;
    app.add_option("--precision", cfg.precision, "significant digits of printed numbers")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    Args eargs;
    std::string fn;
    auto* eval = app.add_subcommand("eval", "evaluate a special function");
    eval->add_option("fn", fn, "function name")->required();
    for (const char* flag : {"r", "K", "t", "s", "a", "b", "y"})
        eval->add_option_function<double>(std::string("--") + flag,
                                          [&eargs, f = std::string(flag)](double v) { eargs.values[f] = v; });
    eval->add_option("--n", eargs.n, "dimension");
    eval->add_option("--tol", cfg.tolerance, "inversion tolerance")->check(CLI::PositiveNumber);

    Args bargs;
    std::string bname;
    auto* bound = app.add_subcommand("bound", "evaluate a theorem bound");
    bound->add_option("name", bname, "bound name")->required();
    bound->add_option("--n", bargs.n, "dimension (default 2)");
    for (const char* flag : {"K", "s", "diam", "U", "CD", "aseev-C", "k-dist"})
        bound->add_option_function<double>(std::string("--") + flag,
                                           [&bargs, f = std::string(flag)](double v) { bargs.values[f] = v; });

    std::string fig;
    double k_min = 0.0, k_max = 0.0;
    int steps = 0;
    std::string out_path;
    auto* figure = app.add_subcommand("figure", "write figure curve data as CSV");
    figure->add_option("figure", fig, "fig3 or fig4")->required();
    figure->add_option("--k-min", k_min)->required();
    figure->add_option("--k-max", k_max)->required();
    figure->add_option("--steps", steps)->required();
    figure->add_option("--out", out_path, "output file (stdout when omitted)");

    std::string suite;
    std::optional<double> vtol;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "identities|theorems|metrics|all")->required();
    verify->add_option("--tol", vtol, "violation tolerance (suite default when omitted)")->check(CLI::PositiveNumber);

    for (auto* sub : {eval, bound, figure, verify}) sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "qcb: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*eval) {
            out << render(evaluate_function(fn, eargs, cfg), cfg.precision) << '\n';
        } else if (*bound) {
            out << render(evaluate_bound(bname, bargs), cfg.precision) << '\n';
        } else if (*figure) {
            const auto table = emit_figure(parse_figure(fig), k_min, k_max, steps);
            if (out_path.empty()) {
                write_csv(out, table, cfg.precision);
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw usage_error("figure: cannot open '" + out_path + "' for writing");
                write_csv(f, table, cfg.precision);
            }
        } else if (*verify) {
            const auto report = run_suite(suite, vtol);
            write_report(out, report, cfg.precision);
            return report.all_pass() ? exit_ok : exit_check_failed;
        }
    } catch (const usage_error& e) {
        err << "qcb: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "qcb: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        err << "qcb: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace qcb::cli
