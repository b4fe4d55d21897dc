#include "wavestab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wavestab/experiments.hpp"
#include "wavestab/report.hpp"
#include "wavestab/simulate.hpp"

namespace wavestab::cli {

namespace {

using OptionMap = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(trim(item));
    return parts;
}

double parse_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw UsageError("invalid number for '" + key + "': '" + value + "'");
    return v;
}

long long parse_int(const std::string& key, const std::string& value) {
    long long v = 0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw UsageError("invalid integer for '" + key + "': '" + value + "'");
    return v;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const std::string& item : split(value, ','))
        out.push_back(parse_double(key, item));
    if (out.empty()) throw UsageError("empty list for '" + key + "'");
    return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
    std::vector<int> out;
    for (const std::string& item : split(value, ','))
        out.push_back(static_cast<int>(parse_int(key, item)));
    if (out.empty()) throw UsageError("empty list for '" + key + "'");
    return out;
}

Scheme parse_scheme_or_fail(const std::string& key, const std::string& value) {
    const auto s = parse_scheme(value);
    if (!s)
        throw UsageError("invalid scheme for '" + key + "': '" + value +
                         "' (expected lax, ftcs, ftfs, or ftbs)");
    return *s;
}

std::vector<Scheme> parse_scheme_list(const std::string& key, const std::string& value) {
    std::vector<Scheme> out;
    for (const std::string& item : split(value, ','))
        out.push_back(parse_scheme_or_fail(key, item));
    if (out.empty()) throw UsageError("empty list for '" + key + "'");
    return out;
}

// Per-command option tables. Keys use underscores; the matching flag is
// "--" + key with '-' for '_'. Every option either has a builtin default or
// is required.
struct CommandSpec {
    const char* name;
    std::vector<std::string> options;    // echo order
    std::vector<std::string> required;
};

const std::vector<CommandSpec>& command_specs() {
    static const std::vector<CommandSpec> specs = {
        {"analyze", {"scheme", "courant", "samples", "out", "format"}, {"scheme", "courant"}},
        {"critical", {"scheme", "c_lo", "c_hi", "tol", "out", "format"}, {"scheme"}},
        {"corner", {"scheme", "courant", "out", "format"}, {"scheme", "courant"}},
        {"sweep", {"schemes", "c_grid", "out", "format"}, {}},
        {"simulate",
         {"scheme", "courant", "a", "dx", "cells", "steps", "ic", "ic_mode", "ic_seed", "ic_amp",
          "out", "format"},
         {"scheme", "courant"}},
        {"validate-modes", {"schemes", "c_list", "modes", "cells", "steps", "out", "format"}, {}},
        {"table1", {"c_samples", "out", "format"}, {}},
        {"converge",
         {"scheme", "courant", "base_n", "doublings", "final_time", "ic", "ic_mode", "a", "dx",
          "cells", "out", "format"},
         {"scheme", "courant"}},
    };
    return specs;
}

OptionMap builtin_defaults(const std::string& command) {
    OptionMap d = {
        {"a", "1"},
        {"dx", "0.005"},
        {"cells", "200"},
        {"steps", "400"},
        {"ic", "gaussian"},
        {"ic_mode", "1"},
        {"ic_seed", "12345"},
        {"ic_amp", "1e-10"},
        {"out", ""},
        {"format", "table"},
        {"samples", "4096"},
        {"c_lo", "1e-6"},
        {"c_hi", "4"},
        {"tol", "1e-6"},
        {"schemes", "lax,ftcs,ftfs,ftbs"},
        {"c_grid", ""},      // empty: 0.1 .. 2.0 step 0.1
        {"c_list", "0.25,0.5,0.9,1"},
        {"modes", "1,2,3"},
        {"c_samples", "0.25,0.5,0.75,1,1.25,1.5"},
        {"base_n", "64"},
        {"doublings", "3"},
        {"final_time", ""},  // empty: half a domain crossing, 0.5 * L / |a|
    };
    if (command == "validate-modes") {
        d["cells"] = "64";
        d["steps"] = "1";
    }
    return d;
}

const char* kUsage =
    "usage: wavestab <command> [--flag value ...]\n"
    "\n"
    "commands:\n"
    "  analyze         max |G| over theta and the stability verdict for one (scheme, C)\n"
    "  critical        largest stable Courant number by bisection\n"
    "  corner          the xi = +/-1 corner-substitution bounds on C\n"
    "  sweep           stability table over a grid of Courant numbers\n"
    "  simulate        time-step a run and report per-step norms\n"
    "  validate-modes  measured vs analytic per-mode amplification (exit 2 on FAIL rows)\n"
    "  table1          four-case scheme classification (exit 2 on discrepancy)\n"
    "  converge        grid-refinement orders against the exact solution\n"
    "\n"
    "common flags: --config FILE, --out FILE, --format csv|table\n"
    "schemes: lax ftcs ftfs ftbs; initial conditions: gaussian sine random\n"
    "run 'wavestab help' for this text; see README.md for per-command flags.\n";

const CommandSpec& find_command(const std::string& name) {
    for (const CommandSpec& spec : command_specs())
        if (name == spec.name) return spec;
    throw UsageError("unknown command '" + name + "'\n" + kUsage);
}

// --key value and --key=value forms; values never start with "--".
OptionMap parse_flags(const CommandSpec& spec, const std::vector<std::string>& args) {
    OptionMap flags;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg.rfind("--", 0) != 0)
            throw UsageError("expected a flag, got '" + arg + "'");
        std::string key = arg.substr(2);
        std::string value;
        bool have_value = false;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key = key.substr(0, eq);
            have_value = true;
        }
        std::replace(key.begin(), key.end(), '-', '_');
        const bool known = key == "config" ||
                           std::find(spec.options.begin(), spec.options.end(), key) !=
                               spec.options.end();
        if (!known)
            throw UsageError("unknown flag '" + arg + "' for command '" + spec.name + "'");
        if (!have_value) {
            if (i + 1 >= args.size())
                throw UsageError("flag '" + arg + "' expects a value");
            value = args[++i];
        }
        flags[key] = value;
    }
    return flags;
}

Table stability_table(const std::vector<SweepRow>& rows) {
    Table t;
    t.columns = {"scheme", "courant", "max_modulus", "worst_theta", "verdict"};
    for (const SweepRow& r : rows)
        t.rows.push_back({std::string(scheme_label(r.scheme)), r.courant, r.max_modulus,
                          r.worst_theta, std::string(verdict_label(r.verdict))});
    return t;
}

InitialCondition ic_from_options(const OptionMap& opt) {
    const std::string& kind = opt.at("ic");
    if (kind == "gaussian") return InitialCondition::gaussian();
    if (kind == "sine")
        return InitialCondition::sine_mode(
            static_cast<int>(parse_int("ic_mode", opt.at("ic_mode"))));
    if (kind == "random") {
        const double amp = parse_double("ic_amp", opt.at("ic_amp"));
        const long long seed = parse_int("ic_seed", opt.at("ic_seed"));
        return InitialCondition::random(amp, static_cast<std::uint64_t>(seed));
    }
    throw UsageError("invalid value for 'ic': '" + kind +
                     "' (expected gaussian, sine, or random)");
}

ReportSink sink_from_options(const OptionMap& opt) {
    ReportSink sink;
    sink.out_path = opt.at("out");
    const std::string& fmt = opt.at("format");
    if (fmt == "csv")
        sink.format = ReportFormat::Csv;
    else if (fmt == "table")
        sink.format = ReportFormat::AlignedTable;
    else
        throw UsageError("invalid value for 'format': '" + fmt + "' (expected csv or table)");
    return sink;
}

std::vector<double> c_grid_from_options(const OptionMap& opt) {
    if (!opt.at("c_grid").empty()) return parse_double_list("c_grid", opt.at("c_grid"));
    std::vector<double> grid;
    for (int k = 1; k <= 20; ++k) grid.push_back(k / 10.0);
    return grid;
}

int cmd_analyze(const OptionMap& opt, const ReportSink& sink) {
    const SchemeSpec spec = SchemeSpec::named(parse_scheme_or_fail("scheme", opt.at("scheme")));
    const double c = parse_double("courant", opt.at("courant"));
    const int samples = static_cast<int>(parse_int("samples", opt.at("samples")));
    const StabilityReport r = classify_stability(spec, c, samples);
    Table t;
    t.columns = {"scheme", "courant", "max_modulus", "worst_theta", "verdict"};
    t.rows.push_back({r.scheme, r.courant, r.max_modulus, r.worst_theta,
                      std::string(verdict_label(r.verdict))});
    emit_report(t, sink);
    return 0;
}

int cmd_critical(const OptionMap& opt, const ReportSink& sink) {
    const SchemeSpec spec = SchemeSpec::named(parse_scheme_or_fail("scheme", opt.at("scheme")));
    const double c_lo = parse_double("c_lo", opt.at("c_lo"));
    const double c_hi = parse_double("c_hi", opt.at("c_hi"));
    const double tol = parse_double("tol", opt.at("tol"));
    const std::optional<double> critical = critical_courant(spec, c_lo, c_hi, tol);
    Table t;
    t.columns = {"scheme", "c_lo", "c_hi", "tol", "found", "critical_courant"};
    std::vector<Cell> row = {std::string(scheme_label(spec.kind)), c_lo, c_hi, tol,
                             std::string(critical ? "true" : "false")};
    row.push_back(critical ? Cell(*critical) : Cell(std::string()));
    t.rows.push_back(std::move(row));
    emit_report(t, sink);
    return 0;
}

int cmd_corner(const OptionMap& opt, const ReportSink& sink) {
    const SchemeSpec spec = SchemeSpec::named(parse_scheme_or_fail("scheme", opt.at("scheme")));
    const double c = parse_double("courant", opt.at("courant"));
    const CornerCheckResult result = corner_check(spec, c);
    Table t;
    t.columns = {"scheme", "courant", "corner", "condition", "joint_verdict", "joint_c_max"};
    for (const CornerCondition& cond : result.conditions) {
        std::string condition = "trivial";
        if (!cond.trivial) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "C <= %g", cond.c_bound);
            condition = buf;
        }
        std::vector<Cell> row = {std::string(scheme_label(result.scheme)), result.courant,
                                 cond.corner, condition,
                                 std::string(corner_verdict_label(result.joint_verdict))};
        row.push_back(result.joint_verdict == CornerVerdict::CflBound ? Cell(result.c_max)
                                                                      : Cell(std::string()));
        t.rows.push_back(std::move(row));
    }
    emit_report(t, sink);
    return 0;
}

int cmd_sweep(const OptionMap& opt, const ReportSink& sink) {
    const std::vector<Scheme> schemes = parse_scheme_list("schemes", opt.at("schemes"));
    const std::vector<double> grid = c_grid_from_options(opt);
    emit_report(stability_table(cfl_sweep(schemes, grid)), sink);
    return 0;
}

int cmd_simulate(const OptionMap& opt, const ReportSink& sink) {
    RunConfig cfg;
    cfg.a = parse_double("a", opt.at("a"));
    cfg.dx = parse_double("dx", opt.at("dx"));
    cfg.courant = parse_double("courant", opt.at("courant"));
    cfg.n_cells = static_cast<int>(parse_int("cells", opt.at("cells")));
    cfg.n_steps = static_cast<int>(parse_int("steps", opt.at("steps")));
    cfg.ic = ic_from_options(opt);
    const SchemeSpec spec = SchemeSpec::named(parse_scheme_or_fail("scheme", opt.at("scheme")));

    const SimulationRecord rec = run_simulation(cfg, spec);
    Table t;
    t.columns = {"step", "l2", "linf"};
    for (std::size_t s = 0; s < rec.per_step_l2.size(); ++s)
        t.rows.push_back({static_cast<std::int64_t>(s), rec.per_step_l2[s],
                          rec.per_step_linf[s]});
    emit_report(t, sink);

    std::cerr << "# diverged_at = "
              << (rec.diverged_at ? std::to_string(*rec.diverged_at) : "(none)") << "\n";
    std::cerr << "# growth_rate_estimate = "
              << (rec.growth_rate_estimate ? format_double_csv(*rec.growth_rate_estimate)
                                           : "(none)")
              << "\n";
    return 0;
}

int cmd_validate_modes(const OptionMap& opt, const ReportSink& sink) {
    const std::vector<Scheme> schemes = parse_scheme_list("schemes", opt.at("schemes"));
    const std::vector<double> c_list = parse_double_list("c_list", opt.at("c_list"));
    const std::vector<int> modes = parse_int_list("modes", opt.at("modes"));
    const int cells = static_cast<int>(parse_int("cells", opt.at("cells")));
    const int steps = static_cast<int>(parse_int("steps", opt.at("steps")));

    const auto rows = mode_validation(schemes, c_list, modes, cells, steps);
    Table t;
    t.columns = {"scheme", "courant", "mode", "theta", "analytic_re", "analytic_im",
                 "empirical_re", "empirical_im", "abs_diff", "status"};
    bool any_fail = false;
    for (const ModeValidationRow& r : rows) {
        any_fail = any_fail || !r.pass;
        t.rows.push_back({std::string(scheme_label(r.scheme)), r.courant,
                          static_cast<std::int64_t>(r.mode_n), r.theta, r.analytic.real(),
                          r.analytic.imag(), r.empirical.real(), r.empirical.imag(), r.abs_diff,
                          std::string(r.pass ? "OK" : "FAIL")});
    }
    emit_report(t, sink);
    return any_fail ? 2 : 0;
}

int cmd_table1(const OptionMap& opt, const ReportSink& sink) {
    const std::vector<double> samples = parse_double_list("c_samples", opt.at("c_samples"));
    const auto rows = reproduce_table1(samples);
    Table t;
    t.columns = {"case", "time_scheme", "space_scheme", "remark"};
    bool discrepancy = false;
    for (const Table1Row& r : rows) {
        discrepancy = discrepancy || r.remark == Table1Row::Remark::Discrepancy;
        t.rows.push_back({static_cast<std::int64_t>(r.case_id), std::string(r.time_scheme),
                          std::string(r.space_scheme), std::string(remark_label(r.remark))});
    }
    emit_report(t, sink);
    return discrepancy ? 2 : 0;
}

int cmd_converge(const OptionMap& opt, const ReportSink& sink) {
    const SchemeSpec spec = SchemeSpec::named(parse_scheme_or_fail("scheme", opt.at("scheme")));
    const double courant = parse_double("courant", opt.at("courant"));
    const int base_n = static_cast<int>(parse_int("base_n", opt.at("base_n")));
    const int doublings = static_cast<int>(parse_int("doublings", opt.at("doublings")));
    const double a = parse_double("a", opt.at("a"));
    const double dx = parse_double("dx", opt.at("dx"));
    const int cells = static_cast<int>(parse_int("cells", opt.at("cells")));
    const double domain_length = cells * dx;
    const double final_time = opt.at("final_time").empty()
                                  ? 0.5 * domain_length / std::abs(a)
                                  : parse_double("final_time", opt.at("final_time"));
    const InitialCondition ic = ic_from_options(opt);

    const ConvergenceResult result =
        convergence_study(spec, courant, base_n, doublings, final_time, ic, a, domain_length);
    Table t;
    t.columns = {"n_cells", "dx", "n_steps", "l2_error", "observed_order"};
    for (std::size_t k = 0; k < result.grid_sizes.size(); ++k) {
        std::vector<Cell> row = {static_cast<std::int64_t>(result.grid_sizes[k]),
                                 domain_length / result.grid_sizes[k],
                                 static_cast<std::int64_t>(result.step_counts[k]),
                                 result.l2_errors[k]};
        row.push_back(k == 0 ? Cell(std::string()) : Cell(result.observed_orders[k - 1]));
        t.rows.push_back(std::move(row));
    }
    emit_report(t, sink);
    return 0;
}

}  // namespace

const std::vector<std::string>& config_file_keys() {
    static const std::vector<std::string> keys = {"scheme", "courant", "a",       "dx",
                                                  "cells",  "steps",   "ic",      "ic_mode",
                                                  "ic_seed", "out",    "format"};
    return keys;
}

std::map<std::string, std::string> parse_key_value_file(std::istream& in) {
    OptionMap out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw UsageError("config file line " + std::to_string(line_no) +
                             ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw UsageError("config file line " + std::to_string(line_no) + ": empty key");
        const auto& keys = config_file_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw UsageError("unknown key '" + key + "' in config file");
        out[key] = value;
    }
    return out;
}

int run_cli(int argc, const char* const* argv) {
    try {
        if (argc < 2) throw UsageError(std::string("missing command\n") + kUsage);
        const std::string command = argv[1];
        if (command == "help" || command == "--help" || command == "-h") {
            std::cout << kUsage;
            return 0;
        }
        const CommandSpec& spec = find_command(command);

        std::vector<std::string> raw_args;
        for (int i = 2; i < argc; ++i) raw_args.emplace_back(argv[i]);
        const OptionMap flags = parse_flags(spec, raw_args);

        OptionMap effective = builtin_defaults(command);
        if (const auto cfg = flags.find("config"); cfg != flags.end()) {
            std::ifstream file(cfg->second);
            if (!file) throw UsageError("cannot open config file: " + cfg->second);
            for (const auto& [k, v] : parse_key_value_file(file)) effective[k] = v;
        }
        for (const auto& [k, v] : flags)
            if (k != "config") effective[k] = v;

        for (const std::string& req : spec.required)
            if (effective.find(req) == effective.end() || effective.at(req).empty())
                throw UsageError("missing required option '" + req + "' for command '" +
                                 command + "'");

        // Effective configuration, echoed for reproducibility.
        std::cerr << "# command = " << command << "\n";
        for (const std::string& key : spec.options) {
            const auto it = effective.find(key);
            if (it == effective.end()) continue;
            if (!it->second.empty()) {
                std::cerr << "# " << key << " = " << it->second << "\n";
            } else if (key == "c_grid") {
                std::cerr << "# c_grid = 0.1..2.0 step 0.1 (default)\n";
            } else if (key == "final_time") {
                std::cerr << "# final_time = 0.5 domain crossings (default)\n";
            }
        }

        const ReportSink sink = sink_from_options(effective);
        if (command == "analyze") return cmd_analyze(effective, sink);
        if (command == "critical") return cmd_critical(effective, sink);
        if (command == "corner") return cmd_corner(effective, sink);
        if (command == "sweep") return cmd_sweep(effective, sink);
        if (command == "simulate") return cmd_simulate(effective, sink);
        if (command == "validate-modes") return cmd_validate_modes(effective, sink);
        if (command == "table1") return cmd_table1(effective, sink);
        if (command == "converge") return cmd_converge(effective, sink);
        throw UsageError("unknown command '" + command + "'");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace wavestab::cli
