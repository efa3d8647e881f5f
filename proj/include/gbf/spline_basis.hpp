#pragma once

#include <Eigen/Core>

#include "gbf/errors.hpp"

namespace gbf {

/// Values of an extended cubic B-spline and its first two derivatives at the
/// knots of its support.  For spacing h and shape parameter lambda:
///   a1 = (4 - lambda)/24        value at x_{i-1} and x_{i+1}
///   a2 = (8 + lambda)/12        value at x_i
///   b1 = -1/(2h)                derivative weight; E'(x_{i-1}) = -b1, E'(x_{i+1}) = b1
///   g1 = (2 + lambda)/(2h^2)    second derivative at x_{i-1} and x_{i+1}
///   g2 = -(4 + 2lambda)/(2h^2)  second derivative at x_i
struct NodalWeights {
    double a1;
    double a2;
    double b1;
    double g1;
    double g2;
};

/// One member of the extended cubic B-spline family over a uniform knot
/// sequence of spacing h.  Each basis function is a piecewise quartic
/// supported on four cells, C2 across the joins; the quartic terms carry the
/// shape parameter lambda, so lambda = 0 recovers the classical cubic
/// B-spline exactly.
class ExtendedCubicBasis {
public:
    /// Preconditions: h > 0, lambda finite.
    ExtendedCubicBasis(double lambda, double h);

    double lambda() const noexcept { return lambda_; }
    double spacing() const noexcept { return h_; }

private:
    double lambda_;
    double h_;
};

/// Value of basis function E_i at x.  knot0 is the coordinate of knot index 0,
/// so E_i is supported on [knot0 + (i-2)h, knot0 + (i+2)h]; outside it the
/// value is exactly 0.  Cells are resolved left-closed, the rightmost one
/// closed on both ends.
double eval(const ExtendedCubicBasis& basis, Eigen::Index center_index, double x, double knot0);

/// First derivative of E_i at x; same support and cell conventions as eval.
double eval_d1(const ExtendedCubicBasis& basis, Eigen::Index center_index, double x, double knot0);

/// Second derivative of E_i at x; same support and cell conventions as eval.
double eval_d2(const ExtendedCubicBasis& basis, Eigen::Index center_index, double x, double knot0);

/// Knot-line weights of the basis, used by collocation rows and field
/// evaluation.  Invariants: 2*a1 + a2 = 1 and g2 = -2*g1.
NodalWeights nodal_weights(const ExtendedCubicBasis& basis);

}  // namespace gbf
