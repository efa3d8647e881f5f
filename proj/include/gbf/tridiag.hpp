#pragma once

#include <Eigen/Core>

#include "gbf/errors.hpp"

namespace gbf {

/// Tridiagonal linear system of size m: lower/upper have length m-1, main and
/// rhs length m.
struct TridiagonalSystem {
    Eigen::VectorXd lower;
    Eigen::VectorXd main;
    Eigen::VectorXd upper;
    Eigen::VectorXd rhs;

    Eigen::Index size() const noexcept { return main.size(); }
};

/// Thomas algorithm (forward elimination, back substitution).  A pivot whose
/// magnitude falls below 1e-14 of its row scale raises a singular-system
/// error naming the row.
Eigen::VectorXd solve_thomas(const TridiagonalSystem& system);

/// Dense LU solve of the same system, kept as an independent cross-check for
/// the Thomas path.  Raises the same singular-system error on rank loss.
Eigen::VectorXd solve_dense_oracle(const TridiagonalSystem& system);

}  // namespace gbf
