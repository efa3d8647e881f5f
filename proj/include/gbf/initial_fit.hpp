#pragma once

#include <functional>

#include "gbf/mesh_field.hpp"

namespace gbf {

/// Initial profile u0 and, optionally, its derivative du0.  When du0 is
/// absent the end slopes needed by the fit are taken from one-sided
/// fourth-order finite differences of u0 with step h/100.
struct InitialData {
    std::function<double(double)> u0;
    std::function<double(double)> du0;
};

/// Spline interpolant of u0: U(x_i) = u0(x_i) at every knot and
/// U'(a) = du0(a), U'(b) = du0(b) close the two ghost coefficients.  The
/// reconstructed field reproduces the knot values to roundoff.
SplineField fit_initial(const UniformMesh& mesh, double lambda, const InitialData& data);

}  // namespace gbf
