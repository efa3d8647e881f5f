#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbf/solve_report.hpp"

namespace gbf {

enum class ProblemKind { example1, example2, example3 };

/// Fully resolved run configuration.  Optional fields have no default and
/// must be supplied when the selected mode needs them; the rest default to
/// lambda = 0, N = 16, dt = 1e-4, mu = 1.
struct RunConfig {
    std::optional<ProblemKind> problem;
    std::optional<double> alpha;
    double mu = 1.0;
    std::optional<double> eta;
    std::optional<int> q;
    Eigen::Index n_cells = 16;
    double dt = 1e-4;
    std::optional<double> t_end;
    double lambda = 0.0;
    std::vector<double> report_times;
    std::string output_path;
    std::optional<ScanRange> scan;
    std::optional<int> table;
};

/// Raised when --help is requested; carries the help text, exit code 0.
class HelpRequested {
public:
    explicit HelpRequested(std::string text) : text_(std::move(text)) {}
    const std::string& text() const noexcept { return text_; }

private:
    std::string text_;
};

/// Parses command-line flags plus an optional config file (one `key = value`
/// per line, `#` comments).  When file_text is given it stands in for the
/// file named by --config.  Flags override file entries.  args excludes the
/// program name.
RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::string>& file_text = std::nullopt);

/// Executes the configured solve, scan, or table reproduction and prints the
/// error table or profile summary.  Returns the process exit code: 0 on
/// success, 1 on numerical or I/O failure, 2 on configuration errors.
int run(const RunConfig& config);

/// Writes one `profile_t<t>.csv` per snapshot (17 significant digits) plus a
/// `meta.txt` recording the full configuration, into directory `path`.
void write_profile(const SolveReport& report, const std::string& path);

/// Top-level entry point: parse, run, and map errors to exit codes.
int run_cli(int argc, const char* const* argv);

}  // namespace gbf
