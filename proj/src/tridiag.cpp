#include "gbf/tridiag.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace gbf {

namespace {

constexpr double kPivotTol = 1e-14;

void validate(const TridiagonalSystem& system) {
    const Eigen::Index m = system.size();
    if (m < 1) {
        throw InvalidInputError("tridiagonal system must have at least one row");
    }
    if (system.lower.size() != m - 1 || system.upper.size() != m - 1 ||
        system.rhs.size() != m) {
        throw InvalidInputError("tridiagonal band lengths inconsistent with main diagonal");
    }
    if (!system.lower.allFinite() || !system.main.allFinite() || !system.upper.allFinite() ||
        !system.rhs.allFinite()) {
        throw InvalidInputError("tridiagonal system entries must be finite");
    }
}

double row_scale(const TridiagonalSystem& system, Eigen::Index i) {
    const Eigen::Index m = system.size();
    double scale = std::abs(system.main[i]);
    if (i > 0) {
        scale = std::max(scale, std::abs(system.lower[i - 1]));
    }
    if (i < m - 1) {
        scale = std::max(scale, std::abs(system.upper[i]));
    }
    return scale;
}

[[noreturn]] void throw_singular(Eigen::Index row) {
    throw SingularSystemError(row, "singular tridiagonal system at row " + std::to_string(row));
}

}  // namespace

Eigen::VectorXd solve_thomas(const TridiagonalSystem& system) {
    validate(system);
    const Eigen::Index m = system.size();
    Eigen::VectorXd w(m);  // modified upper diagonal
    Eigen::VectorXd g(m);  // modified rhs
    Eigen::VectorXd x(m);

    double pivot = system.main[0];
    if (std::abs(pivot) < kPivotTol * row_scale(system, 0) || row_scale(system, 0) == 0.0) {
        throw_singular(0);
    }
    w[0] = (m > 1) ? system.upper[0] / pivot : 0.0;
    g[0] = system.rhs[0] / pivot;

    for (Eigen::Index i = 1; i < m; ++i) {
        pivot = system.main[i] - system.lower[i - 1] * w[i - 1];
        const double scale = row_scale(system, i);
        if (std::abs(pivot) < kPivotTol * scale || scale == 0.0) {
            throw_singular(i);
        }
        w[i] = (i < m - 1) ? system.upper[i] / pivot : 0.0;
        g[i] = (system.rhs[i] - system.lower[i - 1] * g[i - 1]) / pivot;
    }

    x[m - 1] = g[m - 1];
    for (Eigen::Index i = m - 2; i >= 0; --i) {
        x[i] = g[i] - w[i] * x[i + 1];
    }
    return x;
}

Eigen::VectorXd solve_dense_oracle(const TridiagonalSystem& system) {
    validate(system);
    const Eigen::Index m = system.size();
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        dense(i, i) = system.main[i];
        if (i > 0) {
            dense(i, i - 1) = system.lower[i - 1];
        }
        if (i < m - 1) {
            dense(i, i + 1) = system.upper[i];
        }
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(dense);
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    Eigen::Index worst = 0;
    const double smallest = pivots.minCoeff(&worst);
    const double scale = dense.cwiseAbs().maxCoeff();
    if (scale == 0.0 || smallest < kPivotTol * scale) {
        throw_singular(worst);
    }
    return lu.solve(system.rhs);
}

}  // namespace gbf
