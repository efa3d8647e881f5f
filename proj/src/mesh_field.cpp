#include "gbf/mesh_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace gbf {

UniformMesh::UniformMesh(double a, double b, Eigen::Index n_cells)
    : a_(a), b_(b), n_(n_cells), h_((b - a) / static_cast<double>(n_cells)) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidInputError("mesh endpoints must be finite");
    }
    if (!(a < b)) {
        throw InvalidInputError("mesh requires a < b");
    }
    if (n_cells < 2) {
        throw InvalidInputError("mesh requires at least 2 cells, got " + std::to_string(n_cells));
    }
}

double UniformMesh::knot(Eigen::Index i) const {
    if (i < 0 || i > n_) {
        throw IndexError("knot index " + std::to_string(i) + " outside [0, " + std::to_string(n_) +
                         "]");
    }
    if (i == n_) {
        return b_;
    }
    return a_ + static_cast<double>(i) * h_;
}

Eigen::VectorXd UniformMesh::knots() const {
    Eigen::VectorXd xs(n_ + 1);
    for (Eigen::Index i = 0; i <= n_; ++i) {
        xs[i] = knot(i);
    }
    return xs;
}

SplineField::SplineField(UniformMesh mesh, double lambda)
    : mesh_(std::move(mesh)),
      basis_(lambda, mesh_.spacing()),
      delta_(Eigen::VectorXd::Zero(mesh_.cells() + 3)) {}

SplineField::SplineField(UniformMesh mesh, double lambda, Eigen::VectorXd coefficients)
    : mesh_(std::move(mesh)), basis_(lambda, mesh_.spacing()), delta_(std::move(coefficients)) {
    if (delta_.size() != mesh_.cells() + 3) {
        throw InvalidInputError("coefficient vector must have length N + 3 = " +
                                std::to_string(mesh_.cells() + 3) + ", got " +
                                std::to_string(delta_.size()));
    }
    if (!delta_.allFinite()) {
        throw InvalidInputError("coefficients must be finite");
    }
}

double SplineField::coeff(Eigen::Index i) const {
    if (i < -1 || i > cells() + 1) {
        throw IndexError("coefficient index " + std::to_string(i) + " outside [-1, " +
                         std::to_string(cells() + 1) + "]");
    }
    return delta_[i + 1];
}

double& SplineField::coeff(Eigen::Index i) {
    if (i < -1 || i > cells() + 1) {
        throw IndexError("coefficient index " + std::to_string(i) + " outside [-1, " +
                         std::to_string(cells() + 1) + "]");
    }
    return delta_[i + 1];
}

namespace {

void check_knot_index(const SplineField& field, Eigen::Index i) {
    if (i < 0 || i > field.cells()) {
        throw IndexError("knot index " + std::to_string(i) + " outside [0, " +
                         std::to_string(field.cells()) + "]");
    }
}

}  // namespace

double value_at_knot(const SplineField& field, Eigen::Index i) {
    check_knot_index(field, i);
    const NodalWeights w = nodal_weights(field.basis());
    return w.a1 * field.coeff(i - 1) + w.a2 * field.coeff(i) + w.a1 * field.coeff(i + 1);
}

double deriv_at_knot(const SplineField& field, Eigen::Index i) {
    check_knot_index(field, i);
    const NodalWeights w = nodal_weights(field.basis());
    return w.b1 * (field.coeff(i - 1) - field.coeff(i + 1));
}

double second_deriv_at_knot(const SplineField& field, Eigen::Index i) {
    check_knot_index(field, i);
    const NodalWeights w = nodal_weights(field.basis());
    return w.g1 * (field.coeff(i - 1) - 2.0 * field.coeff(i) + field.coeff(i + 1));
}

Eigen::VectorXd knot_values(const SplineField& field) {
    Eigen::VectorXd values(field.cells() + 1);
    for (Eigen::Index i = 0; i <= field.cells(); ++i) {
        values[i] = value_at_knot(field, i);
    }
    return values;
}

Eigen::VectorXd eval_profile(const SplineField& field, const Eigen::VectorXd& points) {
    const UniformMesh& mesh = field.mesh();
    const double a = mesh.left();
    const double b = mesh.right();
    const double h = mesh.spacing();
    const Eigen::Index n = mesh.cells();
    Eigen::VectorXd values(points.size());
    for (Eigen::Index k = 0; k < points.size(); ++k) {
        const double x = points[k];
        if (!std::isfinite(x)) {
            throw InvalidInputError("evaluation point must be finite");
        }
        if (x < a || x > b) {
            throw DomainError("evaluation point " + std::to_string(x) + " outside [" +
                              std::to_string(a) + ", " + std::to_string(b) + "]");
        }
        const Eigen::Index cell =
            std::clamp<Eigen::Index>(static_cast<Eigen::Index>(std::floor((x - a) / h)), 0, n - 1);
        double sum = 0.0;
        for (Eigen::Index i = cell - 1; i <= cell + 2; ++i) {
            sum += field.coeff(i) * eval(field.basis(), i, x, a);
        }
        values[k] = sum;
    }
    return values;
}

}  // namespace gbf
