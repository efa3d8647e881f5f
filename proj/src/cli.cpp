#include "gbf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gbf/analysis.hpp"
#include "gbf/cn_stepper.hpp"
#include "gbf/initial_fit.hpp"
#include "gbf/problems.hpp"

namespace gbf {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string numg(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string::size_type pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(s.substr(pos));
            return parts;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

double parse_real(const std::string& text, const std::string& key, std::size_t line) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ConfigError(key, line,
                          "malformed number '" + t + "' for key '" + key + "' at line " +
                              std::to_string(line));
    }
    return v;
}

long parse_integer(const std::string& text, const std::string& key, std::size_t line) {
    const std::string t = trim(text);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ConfigError(key, line,
                          "'" + key + "' expects an integer, got '" + t + "' at line " +
                              std::to_string(line));
    }
    return v;
}

ProblemKind parse_problem_name(const std::string& text, const std::string& key,
                               std::size_t line) {
    const std::string t = trim(text);
    if (t == "example1") {
        return ProblemKind::example1;
    }
    if (t == "example2") {
        return ProblemKind::example2;
    }
    if (t == "example3") {
        return ProblemKind::example3;
    }
    throw ConfigError(key, line,
                      "unknown problem '" + t + "' (expected example1|example2|example3)");
}

std::vector<double> parse_time_list(const std::string& text, const std::string& key,
                                    std::size_t line) {
    std::vector<double> times;
    for (const std::string& part : split(text, ',')) {
        times.push_back(parse_real(part, key, line));
    }
    return times;
}

ScanRange parse_scan_range(const std::string& text, const std::string& key, std::size_t line) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3) {
        throw ConfigError(key, line, "'" + key + "' expects lo:hi:step, got '" + text + "'");
    }
    ScanRange range;
    range.lo = parse_real(parts[0], key, line);
    range.hi = parse_real(parts[1], key, line);
    range.step = parse_real(parts[2], key, line);
    return range;
}

void apply_file_entries(const std::string& text, RunConfig& cfg,
                        const std::set<std::string>& flag_given) {
    std::istringstream lines(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(lines, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(body, lineno,
                              "expected 'key = value' at line " + std::to_string(lineno));
        }
        std::string key = trim(body.substr(0, eq));
        std::replace(key.begin(), key.end(), '_', '-');
        if (key == "n-cells") {
            key = "n";
        }
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError(key, lineno,
                              "empty key or value at line " + std::to_string(lineno));
        }
        if (flag_given.count(key) != 0) {
            continue;  // flags override file entries
        }
        if (key == "problem") {
            cfg.problem = parse_problem_name(value, key, lineno);
        } else if (key == "alpha") {
            cfg.alpha = parse_real(value, key, lineno);
        } else if (key == "mu") {
            cfg.mu = parse_real(value, key, lineno);
        } else if (key == "eta") {
            cfg.eta = parse_real(value, key, lineno);
        } else if (key == "q") {
            cfg.q = static_cast<int>(parse_integer(value, key, lineno));
        } else if (key == "n") {
            cfg.n_cells = parse_integer(value, key, lineno);
        } else if (key == "dt") {
            cfg.dt = parse_real(value, key, lineno);
        } else if (key == "t-end") {
            cfg.t_end = parse_real(value, key, lineno);
        } else if (key == "lambda") {
            cfg.lambda = parse_real(value, key, lineno);
        } else if (key == "report-times") {
            cfg.report_times = parse_time_list(value, key, lineno);
        } else if (key == "scan") {
            cfg.scan = parse_scan_range(value, key, lineno);
        } else if (key == "table") {
            cfg.table = static_cast<int>(parse_integer(value, key, lineno));
        } else if (key == "out") {
            cfg.output_path = value;
        } else {
            throw ConfigError(key, lineno,
                              "unknown key '" + key + "' at line " + std::to_string(lineno));
        }
    }
}

void validate_config(RunConfig& cfg) {
    if (!std::isfinite(cfg.dt) || cfg.dt <= 0.0) {
        throw ConfigError("dt", 0, "dt must be positive and finite");
    }
    if (cfg.n_cells < 2) {
        throw ConfigError("n", 0, "n must be at least 2");
    }
    if (cfg.q && *cfg.q < 1) {
        throw ConfigError("q", 0, "q must be a positive integer");
    }
    if (!std::isfinite(cfg.lambda)) {
        throw ConfigError("lambda", 0, "lambda must be finite");
    }
    if (!std::isfinite(cfg.mu)) {
        throw ConfigError("mu", 0, "mu must be finite");
    }
    if ((cfg.alpha && !std::isfinite(*cfg.alpha)) || (cfg.eta && !std::isfinite(*cfg.eta))) {
        throw ConfigError("alpha", 0, "alpha and eta must be finite");
    }
    if (cfg.t_end && (!std::isfinite(*cfg.t_end) || *cfg.t_end <= 0.0)) {
        throw ConfigError("t-end", 0, "t-end must be positive and finite");
    }
    if (cfg.table && *cfg.table != 2 && *cfg.table != 3 && *cfg.table != 4) {
        throw ConfigError("table", 0, "table must be 2, 3, or 4");
    }
    if (cfg.scan) {
        if (!std::isfinite(cfg.scan->lo) || !std::isfinite(cfg.scan->hi) ||
            !std::isfinite(cfg.scan->step)) {
            throw ConfigError("scan", 0, "scan bounds must be finite");
        }
        if (cfg.scan->lo > cfg.scan->hi) {
            throw ConfigError("scan", 0, "scan requires lo <= hi");
        }
        if (cfg.scan->step <= 0.0) {
            throw ConfigError("scan", 0, "scan requires a positive step");
        }
    }
    std::sort(cfg.report_times.begin(), cfg.report_times.end());
    for (const double r : cfg.report_times) {
        if (!std::isfinite(r) || r < 0.0) {
            throw ConfigError("report-times", 0, "report times must be finite and nonnegative");
        }
        if (cfg.t_end && r > *cfg.t_end + 1e-9 * std::max(*cfg.t_end, cfg.dt)) {
            throw ConfigError("report-times", 0,
                              "report time " + numg(r) + " exceeds t-end " + numg(*cfg.t_end));
        }
    }
}

ProblemSpec build_problem(const RunConfig& cfg, std::vector<std::string>& notes) {
    switch (*cfg.problem) {
        case ProblemKind::example1: {
            if (!cfg.alpha) {
                throw ConfigError("alpha", 0, "example1 requires --alpha");
            }
            if (!cfg.eta) {
                throw ConfigError("eta", 0, "example1 requires --eta");
            }
            if (!cfg.q) {
                throw ConfigError("q", 0, "example1 requires --q");
            }
            if (cfg.mu != 1.0) {
                throw ConfigError("mu", 0,
                                  "example1 fixes mu = 1 (its exact solution needs unit "
                                  "diffusivity)");
            }
            notes.push_back("example1 runs with mu = 1; the exact solution requires it");
            return example1(*cfg.alpha, *cfg.eta, *cfg.q);
        }
        case ProblemKind::example2: {
            if (!cfg.alpha) {
                throw ConfigError("alpha", 0, "example2 requires --alpha");
            }
            if (!cfg.eta) {
                throw ConfigError("eta", 0, "example2 requires --eta");
            }
            if (cfg.q && *cfg.q != 1) {
                throw ConfigError("q", 0, "example2 uses q = 1");
            }
            ProblemSpec p = example2();
            p.alpha = *cfg.alpha;
            p.eta = *cfg.eta;
            p.mu = cfg.mu;
            notes.push_back(
                "example2 Dirichlet values frozen from the initial profile: 1 and exp(-40)");
            return p;
        }
        default: {
            if (cfg.alpha && *cfg.alpha != 1.0) {
                throw ConfigError("alpha", 0, "example3 fixes alpha = 1");
            }
            if (cfg.eta && *cfg.eta != 0.0) {
                throw ConfigError("eta", 0, "example3 fixes eta = 0");
            }
            if (cfg.q && *cfg.q != 1) {
                throw ConfigError("q", 0, "example3 uses q = 1");
            }
            ProblemSpec p = example3();
            p.mu = cfg.mu;
            return p;
        }
    }
}

SolveReport solve_once(const ProblemSpec& spec, const RunConfig& cfg, double lambda,
                       const std::vector<double>& times, std::vector<std::string> notes) {
    const UniformMesh mesh(spec.a, spec.b, cfg.n_cells);
    const SplineField initial = fit_initial(mesh, lambda, spec.initial);
    const StepParams params(spec.alpha, spec.mu, spec.eta, spec.q, cfg.dt);
    SolveReport report = integrate(initial, params, spec.bc, *cfg.t_end, times, spec.exact);
    report.meta.problem = spec.name;
    report.meta.output_path = cfg.output_path;
    report.meta.scan = cfg.scan;
    report.meta.table = cfg.table;
    report.meta.notes = std::move(notes);
    return report;
}

void print_run_header(const RunMeta& m) {
    std::printf("problem %s: alpha=%s mu=%s eta=%s q=%d N=%lld dt=%s lambda=%s\n",
                m.problem.c_str(), numg(m.alpha).c_str(), numg(m.mu).c_str(),
                numg(m.eta).c_str(), m.q, static_cast<long long>(m.n_cells),
                numg(m.dt).c_str(), numg(m.lambda).c_str());
}

int run_problem(const RunConfig& cfg) {
    if (!cfg.problem) {
        throw ConfigError("problem", 0, "--problem is required (or use --table)");
    }
    if (!cfg.t_end) {
        throw ConfigError("t-end", 0, "--t-end is required");
    }
    std::vector<std::string> notes;
    const ProblemSpec spec = build_problem(cfg, notes);
    const std::vector<double> times =
        cfg.report_times.empty() ? std::vector<double>{*cfg.t_end} : cfg.report_times;

    if (cfg.scan) {
        if (!spec.exact) {
            throw ConfigError("scan", 0, "lambda scan requires a problem with an exact solution");
        }
        const ScanResult scan = scan_lambda(spec, cfg.n_cells, cfg.dt, *cfg.t_end, cfg.scan->lo,
                                            cfg.scan->hi, cfg.scan->step);
        std::size_t failed = 0;
        for (const ScanEntry& entry : scan.trace) {
            failed += entry.failed ? 1u : 0u;
        }
        const SolveReport base = solve_once(spec, cfg, cfg.lambda, times, notes);
        const SolveReport best = solve_once(spec, cfg, scan.best_lambda, times, notes);
        print_run_header(base.meta);
        std::printf("lambda scan [%s, %s] step %s: best lambda = %s, Linf(t=%s) = %s"
                    " (%zu runs, %zu failed)\n",
                    numg(cfg.scan->lo).c_str(), numg(cfg.scan->hi).c_str(),
                    numg(cfg.scan->step).c_str(), numg(scan.best_lambda).c_str(),
                    numg(*cfg.t_end).c_str(), numg(scan.best_error).c_str(), scan.trace.size(),
                    failed);
        std::printf("%10s %22s %22s\n", "t", ("Linf(l=" + numg(cfg.lambda) + ")").c_str(),
                    ("Linf(l=" + numg(scan.best_lambda) + ")").c_str());
        for (std::size_t k = 0; k < base.errors.size(); ++k) {
            std::printf("%10s %22.6e %22.6e\n", numg(base.errors[k].first).c_str(),
                        base.errors[k].second, best.errors[k].second);
        }
        if (!cfg.output_path.empty()) {
            write_profile(base, cfg.output_path);
            std::ofstream trace_file(std::filesystem::path(cfg.output_path) / "scan_trace.csv");
            if (!trace_file) {
                throw Error("cannot write scan trace into '" + cfg.output_path + "'");
            }
            trace_file << "lambda,linf,failed\n";
            for (const ScanEntry& entry : scan.trace) {
                trace_file << num17(entry.lambda) << ',' << num17(entry.linf) << ','
                           << (entry.failed ? 1 : 0) << '\n';
            }
        }
        return 0;
    }

    const SolveReport report = solve_once(spec, cfg, cfg.lambda, times, notes);
    print_run_header(report.meta);
    if (spec.exact) {
        std::printf("%10s %22s\n", "t", "Linf");
        for (const auto& [t, err] : report.errors) {
            std::printf("%10s %22.6e\n", numg(t).c_str(), err);
        }
    } else {
        std::printf("%10s %22s\n", "t", "max|U|");
        for (const Snapshot& snap : report.snapshots) {
            std::printf("%10s %22.6e\n", numg(snap.t).c_str(),
                        snap.knot_values.cwiseAbs().maxCoeff());
        }
    }
    if (!cfg.output_path.empty()) {
        write_profile(report, cfg.output_path);
    }
    return 0;
}

struct TablePreset {
    double alpha;
    double eta;
    Eigen::Index n_cells;
    double dt;
    std::vector<int> qs;
    std::vector<double> times;
};

int run_table(const RunConfig& cfg) {
    const int id = *cfg.table;
    TablePreset preset;
    preset.dt = 1e-4;
    if (id == 2) {
        preset = {0.1, -0.0025, 16, 1e-4, {1, 2, 4}, {0.1, 0.2, 0.3, 0.4, 0.5}};
    } else if (id == 3) {
        preset = {1.0, 1.0, 16, 1e-4, {1, 2, 4}, {0.2, 0.4, 0.6, 0.8, 1.0}};
    } else {
        preset = {0.0, 0.0, 8, 1e-4, {1}, {0.5}};
    }
    const double t_end = preset.times.back();
    std::vector<std::string> machine;

    std::printf("table %d: Linf error norms, example1, dt=%s, N=%lld, lambda=%s\n", id,
                numg(preset.dt).c_str(), static_cast<long long>(preset.n_cells),
                numg(cfg.lambda).c_str());
    if (id == 3) {
        std::printf("note: N is an assumption for this table\n");
    }

    auto run_rows = [&](double alpha, double eta, int q, const char* label) {
        const ProblemSpec spec = example1(alpha, eta, q);
        const UniformMesh mesh(spec.a, spec.b, preset.n_cells);
        const StepParams params(spec.alpha, spec.mu, spec.eta, spec.q, preset.dt);
        const SolveReport base = integrate(fit_initial(mesh, cfg.lambda, spec.initial), params,
                                           spec.bc, t_end, preset.times, spec.exact);
        std::optional<ScanResult> scan;
        std::optional<SolveReport> tuned;
        if (cfg.scan) {
            scan = scan_lambda(spec, preset.n_cells, preset.dt, t_end, cfg.scan->lo,
                               cfg.scan->hi, cfg.scan->step);
            tuned = integrate(fit_initial(mesh, scan->best_lambda, spec.initial), params,
                              spec.bc, t_end, preset.times, spec.exact);
        }
        std::printf("%s\n", label);
        if (scan) {
            std::printf("%10s %20s %20s   best lambda = %s\n", "t",
                        ("Linf(l=" + numg(cfg.lambda) + ")").c_str(),
                        ("Linf(l=" + numg(scan->best_lambda) + ")").c_str(),
                        numg(scan->best_lambda).c_str());
        } else {
            std::printf("%10s %20s\n", "t", ("Linf(l=" + numg(cfg.lambda) + ")").c_str());
        }
        for (std::size_t k = 0; k < base.errors.size(); ++k) {
            const auto& [t, err] = base.errors[k];
            if (tuned) {
                std::printf("%10s %20.6e %20.6e\n", numg(t).c_str(), err,
                            tuned->errors[k].second);
            } else {
                std::printf("%10s %20.6e\n", numg(t).c_str(), err);
            }
            machine.push_back(std::to_string(q) + "," + numg(t) + "," + numg(cfg.lambda) + "," +
                              num17(err));
            if (tuned) {
                machine.push_back(std::to_string(q) + "," + numg(t) + "," +
                                  numg(scan->best_lambda) + "," +
                                  num17(tuned->errors[k].second));
            }
        }
    };

    if (id == 2 || id == 3) {
        for (const int q : preset.qs) {
            const std::string label = "q=" + std::to_string(q) + ", alpha=" + numg(preset.alpha) +
                                      ", eta=" + numg(preset.eta);
            run_rows(preset.alpha, preset.eta, q, label.c_str());
        }
    } else {
        for (const double alpha : {0.01, 0.001}) {
            for (const double eta : {1.0, 10.0, 100.0}) {
                const std::string label = "alpha=" + numg(alpha) + ", eta=" + numg(eta) + ", q=1";
                run_rows(alpha, eta, 1, label.c_str());
            }
        }
    }

    std::printf("q,t,lambda,linf\n");
    for (const std::string& line : machine) {
        std::printf("%s\n", line.c_str());
    }
    if (!cfg.output_path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.output_path, ec);
        if (ec) {
            throw Error("cannot create output directory '" + cfg.output_path + "'");
        }
        std::ofstream out(std::filesystem::path(cfg.output_path) /
                          ("table" + std::to_string(id) + ".csv"));
        if (!out) {
            throw Error("cannot write table CSV into '" + cfg.output_path + "'");
        }
        out << "q,t,lambda,linf\n";
        for (const std::string& line : machine) {
            out << line << '\n';
        }
    }
    return 0;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::string>& file_text) {
    CLI::App app{"extended cubic B-spline collocation solver for the generalized "
                 "Burgers-Fisher equation"};
    app.name("gbf");

    std::string problem_s;
    std::string report_s;
    std::string scan_s;
    std::string out_s;
    std::string config_path;
    double alpha = 0.0;
    double mu = 1.0;
    double eta = 0.0;
    double dt = 1e-4;
    double t_end = 0.0;
    double lambda = 0.0;
    long long n_cells = 16;
    int q = 1;
    int table = 2;

    auto* o_problem =
        app.add_option("--problem", problem_s, "benchmark problem: example1|example2|example3");
    auto* o_alpha = app.add_option("--alpha", alpha, "advection coefficient");
    auto* o_mu = app.add_option("--mu", mu, "diffusion coefficient (default 1)");
    auto* o_eta = app.add_option("--eta", eta, "reaction coefficient");
    auto* o_q = app.add_option("--q", q, "nonlinearity exponent (positive integer)");
    auto* o_n = app.add_option("--n", n_cells, "number of mesh cells (default 16)");
    auto* o_dt = app.add_option("--dt", dt, "time step (default 1e-4)");
    auto* o_tend = app.add_option("--t-end", t_end, "final time");
    auto* o_lambda = app.add_option("--lambda", lambda, "basis shape parameter (default 0)");
    auto* o_report =
        app.add_option("--report-times", report_s, "comma-separated report times");
    auto* o_scan = app.add_option("--scan", scan_s, "lambda scan grid lo:hi:step");
    auto* o_table = app.add_option("--table", table, "built-in benchmark table preset: 2, 3, or 4");
    auto* o_out = app.add_option("--out", out_s, "output directory for CSV profiles");
    app.add_option("--config", config_path, "configuration file (key = value lines)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw ConfigError("", 0, e.what());
    }

    RunConfig cfg;
    std::set<std::string> given;
    if (o_problem->count() > 0) {
        cfg.problem = parse_problem_name(problem_s, "problem", 0);
        given.insert("problem");
    }
    if (o_alpha->count() > 0) {
        cfg.alpha = alpha;
        given.insert("alpha");
    }
    if (o_mu->count() > 0) {
        cfg.mu = mu;
        given.insert("mu");
    }
    if (o_eta->count() > 0) {
        cfg.eta = eta;
        given.insert("eta");
    }
    if (o_q->count() > 0) {
        cfg.q = q;
        given.insert("q");
    }
    if (o_n->count() > 0) {
        cfg.n_cells = n_cells;
        given.insert("n");
    }
    if (o_dt->count() > 0) {
        cfg.dt = dt;
        given.insert("dt");
    }
    if (o_tend->count() > 0) {
        cfg.t_end = t_end;
        given.insert("t-end");
    }
    if (o_lambda->count() > 0) {
        cfg.lambda = lambda;
        given.insert("lambda");
    }
    if (o_report->count() > 0) {
        cfg.report_times = parse_time_list(report_s, "report-times", 0);
        given.insert("report-times");
    }
    if (o_scan->count() > 0) {
        cfg.scan = parse_scan_range(scan_s, "scan", 0);
        given.insert("scan");
    }
    if (o_table->count() > 0) {
        cfg.table = table;
        given.insert("table");
    }
    if (o_out->count() > 0) {
        cfg.output_path = out_s;
        given.insert("out");
    }

    std::optional<std::string> text = file_text;
    if (!text && !config_path.empty()) {
        std::ifstream file(config_path);
        if (!file) {
            throw ConfigError("config", 0, "cannot read config file '" + config_path + "'");
        }
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    if (text) {
        apply_file_entries(*text, cfg, given);
    }
    validate_config(cfg);
    return cfg;
}

void write_profile(const SolveReport& report, const std::string& path) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(path, ec);
    if (ec) {
        throw Error("cannot create output directory '" + path + "': " + ec.message());
    }
    for (const Snapshot& snap : report.snapshots) {
        if (report.knots.size() != snap.knot_values.size()) {
            throw InvalidInputError("report lacks knot coordinates for its snapshots");
        }
        const bool with_exact = snap.exact_values.size() == snap.knot_values.size() &&
                                snap.exact_values.size() > 0;
        const fs::path file = fs::path(path) / ("profile_t" + numg(snap.t) + ".csv");
        std::ofstream out(file);
        if (!out) {
            throw Error("cannot open '" + file.string() + "' for writing");
        }
        out << (with_exact ? "x,u_numeric,u_exact,abs_error\n" : "x,u_numeric\n");
        for (Eigen::Index i = 0; i < snap.knot_values.size(); ++i) {
            out << num17(report.knots[i]) << ',' << num17(snap.knot_values[i]);
            if (with_exact) {
                out << ',' << num17(snap.exact_values[i]) << ','
                    << num17(std::abs(snap.knot_values[i] - snap.exact_values[i]));
            }
            out << '\n';
        }
        if (!out) {
            throw Error("write failure on '" + file.string() + "'");
        }
    }

    const RunMeta& m = report.meta;
    std::ofstream meta(fs::path(path) / "meta.txt");
    if (!meta) {
        throw Error("cannot open meta.txt in '" + path + "' for writing");
    }
    meta << "problem = " << (m.problem.empty() ? "none" : m.problem) << '\n';
    meta << "alpha = " << num17(m.alpha) << '\n';
    meta << "mu = " << num17(m.mu) << '\n';
    meta << "eta = " << num17(m.eta) << '\n';
    meta << "q = " << m.q << '\n';
    meta << "n = " << m.n_cells << '\n';
    meta << "dt = " << num17(m.dt) << '\n';
    meta << "lambda = " << num17(m.lambda) << '\n';
    meta << "t_end = " << num17(m.t_end) << '\n';
    meta << "report_times = ";
    for (std::size_t k = 0; k < m.report_times.size(); ++k) {
        meta << (k ? "," : "") << numg(m.report_times[k]);
    }
    meta << '\n';
    meta << "out = " << (m.output_path.empty() ? "none" : m.output_path) << '\n';
    if (m.scan) {
        meta << "scan = " << numg(m.scan->lo) << ':' << numg(m.scan->hi) << ':'
             << numg(m.scan->step) << '\n';
    } else {
        meta << "scan = none\n";
    }
    if (m.table) {
        meta << "table = " << *m.table << '\n';
    } else {
        meta << "table = none\n";
    }
    for (const std::string& note : m.notes) {
        meta << "note = " << note << '\n';
    }
    if (!meta) {
        throw Error("write failure on meta.txt in '" + path + "'");
    }
}

int run(const RunConfig& config) {
    try {
        if (config.table) {
            return run_table(config);
        }
        return run_problem(config);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    try {
        const RunConfig cfg = parse_config(args);
        return run(cfg);
    } catch (const HelpRequested& help) {
        std::fputs(help.text().c_str(), stdout);
        return 0;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace gbf
