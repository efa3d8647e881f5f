#include "gbf/initial_fit.hpp"

#include <cmath>
#include <string>

#include "gbf/tridiag.hpp"

namespace gbf {

namespace {

double checked(const std::function<double(double)>& f, double x, const char* name) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        throw InvalidInputError(std::string(name) + " is not finite at x = " + std::to_string(x));
    }
    return v;
}

// One-sided fourth-order end slopes; sign < 0 mirrors the stencil for the
// right endpoint.
double one_sided_slope(const std::function<double(double)>& u0, double x, double step,
                       double sign) {
    const double s = sign * step;
    const double f0 = checked(u0, x, "u0");
    const double f1 = checked(u0, x + s, "u0");
    const double f2 = checked(u0, x + 2.0 * s, "u0");
    const double f3 = checked(u0, x + 3.0 * s, "u0");
    const double f4 = checked(u0, x + 4.0 * s, "u0");
    return (-25.0 * f0 + 48.0 * f1 - 36.0 * f2 + 16.0 * f3 - 3.0 * f4) / (12.0 * s);
}

}  // namespace

SplineField fit_initial(const UniformMesh& mesh, double lambda, const InitialData& data) {
    if (!data.u0) {
        throw InvalidInputError("initial data requires u0");
    }
    const Eigen::Index n = mesh.cells();
    const double h = mesh.spacing();
    const double a = mesh.left();
    const double b = mesh.right();
    const NodalWeights w = nodal_weights(ExtendedCubicBasis(lambda, h));

    const double slope_left =
        data.du0 ? checked(data.du0, a, "du0") : one_sided_slope(data.u0, a, h / 100.0, +1.0);
    const double slope_right =
        data.du0 ? checked(data.du0, b, "du0") : one_sided_slope(data.u0, b, h / 100.0, -1.0);

    // Ghost closures delta_{-1} = delta_1 - 2h*u0'(a) and
    // delta_{N+1} = delta_{N-1} + 2h*u0'(b) folded into the end rows of the
    // (N+1)-row interpolation system.
    TridiagonalSystem system;
    system.lower.resize(n);
    system.main.resize(n + 1);
    system.upper.resize(n);
    system.rhs.resize(n + 1);

    system.main[0] = w.a2;
    system.upper[0] = 2.0 * w.a1;
    system.rhs[0] = checked(data.u0, mesh.knot(0), "u0") + 2.0 * h * w.a1 * slope_left;
    for (Eigen::Index i = 1; i < n; ++i) {
        system.lower[i - 1] = w.a1;
        system.main[i] = w.a2;
        system.upper[i] = w.a1;
        system.rhs[i] = checked(data.u0, mesh.knot(i), "u0");
    }
    system.lower[n - 1] = 2.0 * w.a1;
    system.main[n] = w.a2;
    system.rhs[n] = checked(data.u0, mesh.knot(n), "u0") - 2.0 * h * w.a1 * slope_right;

    const Eigen::VectorXd inner = solve_thomas(system);

    Eigen::VectorXd delta(n + 3);
    delta.segment(1, n + 1) = inner;
    delta[0] = inner[1] - 2.0 * h * slope_left;
    delta[n + 2] = inner[n - 1] + 2.0 * h * slope_right;
    return SplineField(mesh, lambda, std::move(delta));
}

}  // namespace gbf
