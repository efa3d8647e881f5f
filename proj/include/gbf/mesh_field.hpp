#pragma once

#include <Eigen/Core>

#include "gbf/errors.hpp"
#include "gbf/spline_basis.hpp"

namespace gbf {

/// Uniform partition of [a, b] into n_cells cells of spacing h = (b-a)/n_cells.
/// Knot i sits at a + i*h for i = 0..n_cells, with knot(n_cells) returned as
/// exactly b.
class UniformMesh {
public:
    /// Preconditions: a < b, n_cells >= 2, endpoints finite.
    UniformMesh(double a, double b, Eigen::Index n_cells);

    double left() const noexcept { return a_; }
    double right() const noexcept { return b_; }
    Eigen::Index cells() const noexcept { return n_; }
    double spacing() const noexcept { return h_; }

    /// Coordinate of knot i, i in [0, cells()].
    double knot(Eigen::Index i) const;

    /// All knot coordinates, length cells() + 1.
    Eigen::VectorXd knots() const;

private:
    double a_;
    double b_;
    Eigen::Index n_;
    double h_;
};

/// Spline surrogate U(x) = sum_i delta_i E_i(x) over a uniform mesh, with
/// coefficients delta_{-1}..delta_{N+1} (N = mesh.cells()); the two ghost
/// coefficients carry the boundary closure.
class SplineField {
public:
    /// Zero-coefficient field.
    SplineField(UniformMesh mesh, double lambda);

    /// Field with given coefficients, ordered delta_{-1}..delta_{N+1}
    /// (length N + 3).  Preconditions: correct length, all entries finite.
    SplineField(UniformMesh mesh, double lambda, Eigen::VectorXd coefficients);

    const UniformMesh& mesh() const noexcept { return mesh_; }
    const ExtendedCubicBasis& basis() const noexcept { return basis_; }
    double lambda() const noexcept { return basis_.lambda(); }
    Eigen::Index cells() const noexcept { return mesh_.cells(); }

    /// Coefficient delta_i, i in [-1, cells() + 1].
    double coeff(Eigen::Index i) const;
    double& coeff(Eigen::Index i);

    /// Raw coefficient storage, ordered delta_{-1}..delta_{N+1}.
    const Eigen::VectorXd& coeffs() const noexcept { return delta_; }
    Eigen::VectorXd& coeffs() noexcept { return delta_; }

private:
    UniformMesh mesh_;
    ExtendedCubicBasis basis_;
    Eigen::VectorXd delta_;
};

/// U(x_i) = a1*delta_{i-1} + a2*delta_i + a1*delta_{i+1}, i in [0, N].
double value_at_knot(const SplineField& field, Eigen::Index i);

/// U'(x_i) = b1*(delta_{i-1} - delta_{i+1}).
double deriv_at_knot(const SplineField& field, Eigen::Index i);

/// U''(x_i) = g1*(delta_{i-1} - 2*delta_i + delta_{i+1}).
double second_deriv_at_knot(const SplineField& field, Eigen::Index i);

/// U at every knot, length N + 1.
Eigen::VectorXd knot_values(const SplineField& field);

/// U evaluated at arbitrary points inside [a, b]; points outside raise a
/// domain error.
Eigen::VectorXd eval_profile(const SplineField& field, const Eigen::VectorXd& points);

}  // namespace gbf
