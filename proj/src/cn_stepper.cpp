#include "gbf/cn_stepper.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "gbf/tridiag.hpp"

namespace gbf {

namespace {

double powi(double base, int exponent) {
    double r = 1.0;
    for (int k = 0; k < exponent; ++k) {
        r *= base;
    }
    return r;
}

bool finite3(const std::array<double, 3>& v) {
    return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

// Folded end row after ghost elimination, or a pinned row when the
// collocation row is proportional to the boundary equation and folding
// cancels it (pure-reaction and zero-dynamics regimes).
struct FoldedRow {
    double inner;  // coefficient of the second-from-end unknown
    double diag;
    double rhs;
};

FoldedRow fold_end_row(const std::array<double, 3>& row, double rhs, double bc_value,
                       double pin_value, const NodalWeights& w, bool left_end,
                       Eigen::Index node) {
    const double ghost = left_end ? row[0] : row[2];
    const double diag = row[1];
    const double inner = left_end ? row[2] : row[0];
    const double scale = std::max({std::abs(row[0]), std::abs(row[1]), std::abs(row[2])});
    const double folded_diag = diag - ghost * (w.a2 / w.a1);
    const double folded_inner = inner - ghost;
    const double folded_rhs = rhs - ghost * bc_value / w.a1;
    if (std::abs(folded_diag) <= 1e-12 * scale && std::abs(folded_inner) <= 1e-12 * scale) {
        if (std::abs(folded_rhs) > 1e-9 * std::max(1.0, std::abs(rhs))) {
            throw SingularSystemError(node, "collocation row at node " + std::to_string(node) +
                                                " degenerates and contradicts the boundary value");
        }
        return {0.0, 1.0, pin_value};
    }
    return {folded_inner, folded_diag, folded_rhs};
}

}  // namespace

StepParams::StepParams(double alpha_, double mu_, double eta_, int q_, double dt_)
    : alpha(alpha_), mu(mu_), eta(eta_), q(q_), dt(dt_) {
    if (!std::isfinite(alpha) || !std::isfinite(mu) || !std::isfinite(eta) ||
        !std::isfinite(dt)) {
        throw InvalidInputError("step parameters must be finite");
    }
    if (dt <= 0.0) {
        throw InvalidInputError("dt must be positive, got " + std::to_string(dt));
    }
    if (q < 1) {
        throw InvalidInputError("q must be a positive integer, got " + std::to_string(q));
    }
}

LinearizationTerms linearization_terms(const SplineField& field, Eigen::Index i) {
    return {value_at_knot(field, i), deriv_at_knot(field, i)};
}

RowPair assemble_row(const StepParams& params, const NodalWeights& weights,
                     const LinearizationTerms& terms) {
    const double half = 0.5 * params.dt;
    const double l1q = powi(terms.l1, params.q);
    const double l1qm1 = powi(terms.l1, params.q - 1);
    const double growth = 1.0 + params.alpha * half * params.q * l1qm1 * terms.l2 -
                          params.eta * half + params.eta * half * (1 + params.q) * l1q;
    const double decay =
        1.0 + params.eta * half - params.eta * half * (1 - params.q) * l1q;
    const double adv_new = params.alpha * half * l1q * weights.b1;
    const double adv_old = params.alpha * half * (1 - params.q) * l1q * weights.b1;
    const double dif_side = params.mu * half * weights.g1;
    const double dif_mid = params.mu * half * weights.g2;

    RowPair row;
    row.left = {growth * weights.a1 + adv_new - dif_side, growth * weights.a2 - dif_mid,
                growth * weights.a1 - adv_new - dif_side};
    row.right = {decay * weights.a1 - adv_old + dif_side, decay * weights.a2 + dif_mid,
                 decay * weights.a1 + adv_old + dif_side};
    if (!finite3(row.left) || !finite3(row.right)) {
        throw NumericOverflowError(-1, "non-finite collocation row");
    }
    return row;
}

SplineField step(const SplineField& field, const StepParams& params, double bc_left,
                 double bc_right) {
    if (!std::isfinite(bc_left) || !std::isfinite(bc_right)) {
        throw InvalidInputError("boundary values must be finite");
    }
    const NodalWeights w = nodal_weights(field.basis());
    if (std::abs(w.a1) <= 1e-12) {
        throw DegenerateBoundaryError(
            "boundary elimination impossible: end weight (4 - lambda)/24 vanishes at lambda = " +
            std::to_string(field.lambda()));
    }

    const Eigen::Index n = field.cells();
    TridiagonalSystem sys;
    sys.lower.resize(n);
    sys.main.resize(n + 1);
    sys.upper.resize(n);
    sys.rhs.resize(n + 1);

    std::array<double, 3> first_row{};
    std::array<double, 3> last_row{};
    for (Eigen::Index i = 0; i <= n; ++i) {
        RowPair row;
        try {
            row = assemble_row(params, w, linearization_terms(field, i));
        } catch (const NumericOverflowError&) {
            throw NumericOverflowError(i, "non-finite collocation row at node " +
                                              std::to_string(i));
        }
        const double rhs = row.right[0] * field.coeff(i - 1) + row.right[1] * field.coeff(i) +
                           row.right[2] * field.coeff(i + 1);
        if (!std::isfinite(rhs)) {
            throw NumericOverflowError(i, "non-finite right-hand side at node " +
                                              std::to_string(i));
        }
        sys.rhs[i] = rhs;
        sys.main[i] = row.left[1];
        if (i > 0) {
            sys.lower[i - 1] = row.left[0];
        }
        if (i < n) {
            sys.upper[i] = row.left[2];
        }
        if (i == 0) {
            first_row = row.left;
        }
        if (i == n) {
            last_row = row.left;
        }
    }

    const FoldedRow left =
        fold_end_row(first_row, sys.rhs[0], bc_left, field.coeff(0), w, true, 0);
    sys.main[0] = left.diag;
    sys.upper[0] = left.inner;
    sys.rhs[0] = left.rhs;
    const FoldedRow right =
        fold_end_row(last_row, sys.rhs[n], bc_right, field.coeff(n), w, false, n);
    sys.main[n] = right.diag;
    sys.lower[n - 1] = right.inner;
    sys.rhs[n] = right.rhs;

    const Eigen::VectorXd inner = solve_thomas(sys);

    Eigen::VectorXd delta(n + 3);
    delta.segment(1, n + 1) = inner;
    delta[0] = (bc_left - w.a2 * inner[0] - w.a1 * inner[1]) / w.a1;
    delta[n + 2] = (bc_right - w.a1 * inner[n - 1] - w.a2 * inner[n]) / w.a1;
    if (!delta.allFinite()) {
        throw NumericOverflowError(-1, "non-finite coefficients after step");
    }
    return SplineField(field.mesh(), field.lambda(), std::move(delta));
}

SolveReport integrate(const SplineField& initial, const StepParams& params, const BoundaryFn& bc,
                      double t_end, const std::vector<double>& report_times,
                      const ExactFn& exact) {
    if (!bc) {
        throw InvalidInputError("boundary function required");
    }
    if (!std::isfinite(t_end) || t_end <= 0.0) {
        throw InvalidInputError("t_end must be positive");
    }
    const double dt = params.dt;
    const long n_steps = std::lround(t_end / dt);
    if (n_steps < 1 || std::abs(t_end - static_cast<double>(n_steps) * dt) >
                           1e-9 * std::max(t_end, dt)) {
        throw ConfigError("t-end", 0, "t_end must be an integer multiple of dt");
    }

    std::vector<std::pair<long, double>> marks;
    long prev = 0;
    for (const double r : report_times) {
        if (!std::isfinite(r) || r < 0.0) {
            throw ConfigError("report-times", 0, "report times must be finite and nonnegative");
        }
        const long k = std::lround(r / dt);
        if (k > n_steps || std::abs(r - static_cast<double>(k) * dt) >
                               1e-9 * std::max(std::abs(r), dt)) {
            throw ConfigError("report-times", 0,
                              "report time " + std::to_string(r) +
                                  " does not lie on the time grid");
        }
        if (!marks.empty() && k < prev) {
            throw ConfigError("report-times", 0, "report times must be sorted ascending");
        }
        prev = k;
        marks.emplace_back(k, r);
    }

    SolveReport report;
    report.knots = initial.mesh().knots();
    report.meta.alpha = params.alpha;
    report.meta.mu = params.mu;
    report.meta.eta = params.eta;
    report.meta.q = params.q;
    report.meta.n_cells = initial.cells();
    report.meta.dt = dt;
    report.meta.lambda = initial.lambda();
    report.meta.t_end = t_end;
    report.meta.report_times = report_times;

    const UniformMesh& mesh = initial.mesh();
    auto take_snapshot = [&](const SplineField& f, double t) {
        Snapshot snap;
        snap.t = t;
        snap.knot_values = knot_values(f);
        snap.coefficients = f.coeffs();
        if (exact) {
            snap.exact_values.resize(mesh.cells() + 1);
            for (Eigen::Index i = 0; i <= mesh.cells(); ++i) {
                const double v = exact(mesh.knot(i), t);
                if (!std::isfinite(v)) {
                    throw InvalidInputError("exact solution not finite at t = " +
                                            std::to_string(t));
                }
                snap.exact_values[i] = v;
            }
            const double err =
                (snap.knot_values - snap.exact_values).lpNorm<Eigen::Infinity>();
            report.errors.emplace_back(t, err);
        }
        report.snapshots.push_back(std::move(snap));
    };

    std::size_t next_mark = 0;
    while (next_mark < marks.size() && marks[next_mark].first == 0) {
        take_snapshot(initial, marks[next_mark].second);
        ++next_mark;
    }

    SplineField field = initial;
    for (long s = 1; s <= n_steps; ++s) {
        const double t_new = static_cast<double>(s) * dt;
        const auto [bl, br] = bc(t_new);
        field = step(field, params, bl, br);
        while (next_mark < marks.size() && marks[next_mark].first == s) {
            take_snapshot(field, marks[next_mark].second);
            ++next_mark;
        }
    }
    return report;
}

}  // namespace gbf
