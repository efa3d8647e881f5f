#pragma once

#include <array>
#include <functional>
#include <vector>

#include "gbf/mesh_field.hpp"
#include "gbf/solve_report.hpp"

namespace gbf {

/// Time-stepping parameters for u_t + alpha*u^q*u_x - mu*u_xx = eta*u*(1 - u^q).
struct StepParams {
    /// Preconditions: all finite, dt > 0, q >= 1.
    StepParams(double alpha, double mu, double eta, int q, double dt);

    double alpha;
    double mu;
    double eta;
    int q;
    double dt;
};

/// Frozen nonlinear terms at one collocation node: l1 = U_i^n, l2 = (U_x)_i^n.
struct LinearizationTerms {
    double l1;
    double l2;
};

/// Left/right row triples of the Crank-Nicolson collocation equation at one
/// node: left multiplies (delta_{i-1}, delta_i, delta_{i+1}) at the new time
/// level, right the same triple at the old level.
struct RowPair {
    std::array<double, 3> left;
    std::array<double, 3> right;
};

/// Nonlinear terms of the current field at knot i.
LinearizationTerms linearization_terms(const SplineField& field, Eigen::Index i);

/// One collocation row with the advective term linearized about the old
/// level (products of old-level factors and one new-level factor).
RowPair assemble_row(const StepParams& params, const NodalWeights& weights,
                     const LinearizationTerms& terms);

/// Dirichlet boundary values (left, right) at a given time.
using BoundaryFn = std::function<std::pair<double, double>(double)>;

/// Exact solution u(x, t), when available.
using ExactFn = std::function<double(double, double)>;

/// One Crank-Nicolson step: assembles the N+1 collocation rows, eliminates
/// the ghost coefficients through the Dirichlet values, solves the reduced
/// tridiagonal system, and reconstructs the ghosts so the boundary values are
/// reproduced exactly.  bc_left/bc_right are the Dirichlet values at the NEW
/// time level.
SplineField step(const SplineField& field, const StepParams& params, double bc_left,
                 double bc_right);

/// Advances the initial field to t_end = n_steps*dt and snapshots the state
/// at each report time (each must lie on the time grid).  When exact is
/// given, errors receives (t, Linf over knots) per report time.
SolveReport integrate(const SplineField& initial, const StepParams& params, const BoundaryFn& bc,
                      double t_end, const std::vector<double>& report_times,
                      const ExactFn& exact = {});

}  // namespace gbf
