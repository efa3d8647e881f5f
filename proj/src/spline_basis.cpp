#include "gbf/spline_basis.hpp"

#include <cmath>
#include <string>

namespace gbf {

namespace {

// Cell of the four-cell support containing x, or -1 outside.  Cells are
// left-closed; the last one is closed on both ends so x = right edge counts.
int support_cell(double x, double left_knot, double h) {
    if (x < left_knot || x > left_knot + 4.0 * h) {
        return -1;
    }
    for (int c = 0; c < 3; ++c) {
        if (x < left_knot + (c + 1) * h) {
            return c;
        }
    }
    return 3;
}

void check_point(double x, double knot0) {
    if (!std::isfinite(x) || !std::isfinite(knot0)) {
        throw InvalidInputError("basis evaluation point must be finite");
    }
}

}  // namespace

ExtendedCubicBasis::ExtendedCubicBasis(double lambda, double h) : lambda_(lambda), h_(h) {
    if (!std::isfinite(lambda) || !std::isfinite(h)) {
        throw InvalidInputError("basis parameters must be finite");
    }
    if (h <= 0.0) {
        throw InvalidInputError("basis spacing must be positive, got " + std::to_string(h));
    }
}

double eval(const ExtendedCubicBasis& basis, Eigen::Index center_index, double x, double knot0) {
    check_point(x, knot0);
    const double h = basis.spacing();
    const double lam = basis.lambda();
    const double left_knot = knot0 + static_cast<double>(center_index - 2) * h;
    const int cell = support_cell(x, left_knot, h);
    if (cell < 0) {
        return 0.0;
    }
    const double norm = 24.0 * h * h * h * h;
    switch (cell) {
        case 0: {
            const double t = x - left_knot;
            return (4.0 * h * (1.0 - lam) * t * t * t + 3.0 * lam * t * t * t * t) / norm;
        }
        case 1: {
            const double s = x - (left_knot + h);
            return ((4.0 - lam) * h * h * h * h + 12.0 * h * h * h * s +
                    6.0 * h * h * (2.0 + lam) * s * s - 12.0 * h * s * s * s -
                    3.0 * lam * s * s * s * s) /
                   norm;
        }
        case 2: {
            const double u = x - (left_knot + 3.0 * h);
            return ((4.0 - lam) * h * h * h * h - 12.0 * h * h * h * u +
                    6.0 * h * h * (2.0 + lam) * u * u + 12.0 * h * u * u * u -
                    3.0 * lam * u * u * u * u) /
                   norm;
        }
        default: {
            const double v = x - (left_knot + 4.0 * h);
            return (4.0 * h * (lam - 1.0) * v * v * v + 3.0 * lam * v * v * v * v) / norm;
        }
    }
}

double eval_d1(const ExtendedCubicBasis& basis, Eigen::Index center_index, double x, double knot0) {
    check_point(x, knot0);
    const double h = basis.spacing();
    const double lam = basis.lambda();
    const double left_knot = knot0 + static_cast<double>(center_index - 2) * h;
    const int cell = support_cell(x, left_knot, h);
    if (cell < 0) {
        return 0.0;
    }
    const double norm = 24.0 * h * h * h * h;
    switch (cell) {
        case 0: {
            const double t = x - left_knot;
            return (12.0 * h * (1.0 - lam) * t * t + 12.0 * lam * t * t * t) / norm;
        }
        case 1: {
            const double s = x - (left_knot + h);
            return (12.0 * h * h * h + 12.0 * h * h * (2.0 + lam) * s - 36.0 * h * s * s -
                    12.0 * lam * s * s * s) /
                   norm;
        }
        case 2: {
            const double u = x - (left_knot + 3.0 * h);
            return (-12.0 * h * h * h + 12.0 * h * h * (2.0 + lam) * u + 36.0 * h * u * u -
                    12.0 * lam * u * u * u) /
                   norm;
        }
        default: {
            const double v = x - (left_knot + 4.0 * h);
            return (12.0 * h * (lam - 1.0) * v * v + 12.0 * lam * v * v * v) / norm;
        }
    }
}

double eval_d2(const ExtendedCubicBasis& basis, Eigen::Index center_index, double x, double knot0) {
    check_point(x, knot0);
    const double h = basis.spacing();
    const double lam = basis.lambda();
    const double left_knot = knot0 + static_cast<double>(center_index - 2) * h;
    const int cell = support_cell(x, left_knot, h);
    if (cell < 0) {
        return 0.0;
    }
    const double norm = 24.0 * h * h * h * h;
    switch (cell) {
        case 0: {
            const double t = x - left_knot;
            return (24.0 * h * (1.0 - lam) * t + 36.0 * lam * t * t) / norm;
        }
        case 1: {
            const double s = x - (left_knot + h);
            return (12.0 * h * h * (2.0 + lam) - 72.0 * h * s - 36.0 * lam * s * s) / norm;
        }
        case 2: {
            const double u = x - (left_knot + 3.0 * h);
            return (12.0 * h * h * (2.0 + lam) + 72.0 * h * u - 36.0 * lam * u * u) / norm;
        }
        default: {
            const double v = x - (left_knot + 4.0 * h);
            return (24.0 * h * (lam - 1.0) * v + 36.0 * lam * v * v) / norm;
        }
    }
}

NodalWeights nodal_weights(const ExtendedCubicBasis& basis) {
    const double h = basis.spacing();
    const double lam = basis.lambda();
    NodalWeights w;
    w.a1 = (4.0 - lam) / 24.0;
    w.a2 = (8.0 + lam) / 12.0;
    w.b1 = -1.0 / (2.0 * h);
    w.g1 = (2.0 + lam) / (2.0 * h * h);
    w.g2 = -(4.0 + 2.0 * lam) / (2.0 * h * h);
    return w;
}

}  // namespace gbf
