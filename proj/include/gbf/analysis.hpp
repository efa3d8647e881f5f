#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gbf/problems.hpp"
#include "gbf/solve_report.hpp"

namespace gbf {

/// Max-norm error between a numeric and an exact knot profile of equal
/// length.
double linf_error(const Eigen::VectorXd& numeric, const Eigen::VectorXd& exact);

/// Observed convergence orders log2(E_k / E_{k+1}) for errors measured at
/// successively halved spacings (h, E) sorted by decreasing h.  Entries where
/// either error vanishes yield nullopt.
std::vector<std::optional<double>> estimate_order(
    const std::vector<std::pair<double, double>>& errors_by_h);

/// One lambda-scan sample; failed marks runs that raised an error, excluded
/// from the minimum.
struct ScanEntry {
    double lambda = 0.0;
    double linf = 0.0;
    bool failed = false;
};

/// Scan outcome: the full trace in grid order plus the best sample.  Ties on
/// the error are broken toward the smallest |lambda|, then toward the earlier
/// grid point.
struct ScanResult {
    double best_lambda = 0.0;
    double best_error = 0.0;
    std::vector<ScanEntry> trace;
};

/// Runs the problem once per lambda on the inclusive grid lo, lo+step, ...,
/// hi and ranks the Linf error against the exact solution at t_end.  Requires
/// a problem with an exact solution; raises an error when every run fails.
ScanResult scan_lambda(const ProblemSpec& problem, Eigen::Index n_cells, double dt, double t_end,
                       double lambda_lo, double lambda_hi, double lambda_step);

}  // namespace gbf
