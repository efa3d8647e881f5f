#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gbf {

/// State captured at one report time: knot values, the coefficients behind
/// them, and (when an exact solution is known) its knot samples.
struct Snapshot {
    double t = 0.0;
    Eigen::VectorXd knot_values;
    Eigen::VectorXd coefficients;
    Eigen::VectorXd exact_values;  // empty when no exact solution
};

/// Inclusive lambda grid lo, lo+step, ..., hi.
struct ScanRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
};

/// Full parameter record of a run, carried alongside results for table and
/// CSV emission.
struct RunMeta {
    std::string problem;
    double alpha = 0.0;
    double mu = 0.0;
    double eta = 0.0;
    int q = 0;
    Eigen::Index n_cells = 0;
    double dt = 0.0;
    double lambda = 0.0;
    double t_end = 0.0;
    std::vector<double> report_times;
    std::string output_path;
    std::optional<ScanRange> scan;
    std::optional<int> table;
    std::vector<std::string> notes;
};

/// Result of a time integration: snapshots at the report times and, when an
/// exact solution was supplied, (t, Linf error) pairs in the same order.
struct SolveReport {
    Eigen::VectorXd knots;
    std::vector<Snapshot> snapshots;
    std::vector<std::pair<double, double>> errors;
    RunMeta meta;
};

}  // namespace gbf
