// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gbf/analysis.hpp"
#include "gbf/cn_stepper.hpp"
#include "gbf/errors.hpp"
#include "gbf/initial_fit.hpp"
#include "gbf/problems.hpp"
#include "gbf/spline_basis.hpp"
#include "gbf/tridiag.hpp"
#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int num, const std::string& desc, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", num, desc.c_str(),
                detail.c_str());
    if (!pass) {
        ++failures;
    }
}

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

gbf::SolveReport run_example1(double alpha, double eta, int q, Eigen::Index n, double dt,
                              double t_end, const std::vector<double>& times, double lambda) {
    const auto prob = gbf::example1(alpha, eta, q);
    const gbf::UniformMesh mesh(prob.a, prob.b, n);
    const gbf::SplineField f0 = gbf::fit_initial(mesh, lambda, prob.initial);
    const gbf::StepParams p(prob.alpha, prob.mu, prob.eta, prob.q, dt);
    return gbf::integrate(f0, p, prob.bc, t_end, times, prob.exact);
}

double ratio_to(double measured, double reference) {
    if (measured <= 0.0 || reference <= 0.0) {
        return INFINITY;
    }
    return std::max(measured / reference, reference / measured);
}

void criterion1() {
    const int qs[3] = {1, 2, 4};
    const double published[3][5] = {
        {1.08646e-12, 1.46944e-12, 1.61926e-12, 1.67277e-12, 1.67277e-12},
        {2.17542e-11, 3.02457e-11, 3.33861e-11, 3.45414e-11, 3.49593e-11},
        {3.12324e-11, 4.34227e-11, 4.79300e-11, 4.95853e-11, 5.01746e-11}};
    const std::vector<double> times = {0.1, 0.2, 0.3, 0.4, 0.5};

    bool pass = true;
    double worst_ratio = 0.0;
    double slowest = 0.0;
    std::string where = "-";
    for (int row = 0; row < 3; ++row) {
        const auto t0 = Clock::now();
        const auto rep = run_example1(0.1, -0.0025, qs[row], 16, 1e-4, 0.5, times, 0.0);
        const double elapsed = seconds_since(t0);
        slowest = std::max(slowest, elapsed);
        if (elapsed >= 1.0) {
            pass = false;
        }
        for (int k = 0; k < 5; ++k) {
            const double r = ratio_to(rep.errors[k].second, published[row][k]);
            if (r > worst_ratio) {
                worst_ratio = r;
                where = fmt("q=%d t=%g", qs[row], times[k]);
            }
            if (r > 5.0) {
                pass = false;
            }
        }
    }
    report(1, "benchmark error table, classical basis, within factor 5", pass,
           fmt("worst ratio %.3f at %s; slowest row set %.3f s", worst_ratio, where.c_str(),
               slowest));
}

void criterion2() {
    struct Row {
        double alpha;
        double reference;
    };
    const Row rows[2] = {{0.01, 2.43664e-11}, {0.001, 2.43607e-11}};
    bool pass = true;
    double worst_ratio = 0.0;
    double slowest = 0.0;
    for (const Row& row : rows) {
        const auto t0 = Clock::now();
        const auto rep = run_example1(row.alpha, 1.0, 1, 8, 1e-4, 0.5, {0.5}, 0.0);
        const double elapsed = seconds_since(t0);
        slowest = std::max(slowest, elapsed);
        const double r = ratio_to(rep.errors[0].second, row.reference);
        worst_ratio = std::max(worst_ratio, r);
        if (r > 5.0 || elapsed >= 1.0) {
            pass = false;
        }
    }
    report(2, "small-alpha rows within factor 5", pass,
           fmt("worst ratio %.3f; slowest run %.3f s", worst_ratio, slowest));
}

void criterion3() {
    const auto prob = gbf::example1(0.1, -0.0025, 1);
    const auto t0 = Clock::now();
    const auto res = gbf::scan_lambda(prob, 16, 1e-4, 0.1, -1e-5, 1e-5, 1e-6);
    const double elapsed = seconds_since(t0);

    double err_at_zero = -1.0;
    for (const auto& e : res.trace) {
        if (e.lambda == 0.0 && !e.failed) {
            err_at_zero = e.linf;
        }
    }
    const bool grid_ok = res.trace.size() == 21;
    const bool gain_ok = err_at_zero > 0.0 && res.best_error <= err_at_zero / 5.0;
    const bool loc_ok = std::abs(res.best_lambda + 3e-6) <= 2e-6;
    const bool time_ok = elapsed < 10.0;
    report(3, "shape-parameter scan beats the classical basis", grid_ok && gain_ok && loc_ok && time_ok,
           fmt("best lambda %.3g, error %.3e vs %.3e at 0 (x%.1f), %zu runs, %.3f s",
               res.best_lambda, res.best_error, err_at_zero,
               err_at_zero > 0 ? err_at_zero / res.best_error : 0.0, res.trace.size(), elapsed));
}

void criterion4() {
    const auto t0 = Clock::now();
    const auto rep = run_example1(1.0, 1.0, 1, 16, 1e-4, 1.0, {1.0}, 0.0);
    const double err = rep.errors[0].second;
    const double r = ratio_to(err, 2.99588e-7);
    report(4, "strong-reaction benchmark within one order of magnitude", r <= 10.0,
           fmt("Linf(t=1) = %.6e, ratio %.3f, %.3f s", err, r, seconds_since(t0)));
}

bool prop_partition_of_unity(std::string& note) {
    std::mt19937 rng(1001);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double h = 0.05;
    double worst = 0.0;
    for (double lam : {-10.0, -1.0, 0.0, 0.5, 1.0, 10.0}) {
        const gbf::ExtendedCubicBasis basis(lam, h);
        for (int k = 0; k < 1000; ++k) {
            const double x = unif(rng);
            double sum = 0.0;
            for (Eigen::Index i = -2; i <= 22; ++i) {
                sum += gbf::eval(basis, i, x, 0.0);
            }
            worst = std::max(worst, std::abs(sum - 1.0));
        }
    }
    note = fmt("partition of unity max dev %.2e", worst);
    return worst <= 1e-12;
}

bool prop_c2_junctions(std::string& note) {
    double worst = 0.0;
    for (double lam : {-10.0, -1.0, 0.0, 0.5, 1.0, 10.0}) {
        for (double h : {0.25, 1.0}) {
            const gbf::ExtendedCubicBasis basis(lam, h);
            const double eps = 1e-9 * h;
            for (int k = -2; k <= 2; ++k) {
                const double xk = static_cast<double>(k) * h;
                const double dv = std::abs(gbf::eval(basis, 0, xk + eps, 0.0) -
                                           gbf::eval(basis, 0, xk - eps, 0.0));
                const double d1 = std::abs(gbf::eval_d1(basis, 0, xk + eps, 0.0) -
                                           gbf::eval_d1(basis, 0, xk - eps, 0.0));
                const double d2 = std::abs(gbf::eval_d2(basis, 0, xk + eps, 0.0) -
                                           gbf::eval_d2(basis, 0, xk - eps, 0.0));
                worst = std::max({worst, dv, d1 * h, d2 * h * h});
            }
        }
    }
    note = fmt("junction mismatch (scaled) %.2e", worst);
    return worst <= 1e-6;
}

bool prop_classical_limit(std::string& note) {
    std::mt19937 rng(1002);
    double worst = 0.0;
    for (double h : {0.25, 0.5, 1.0, 2.0}) {
        const gbf::ExtendedCubicBasis basis(0.0, h);
        std::uniform_real_distribution<double> unif(-2.5 * h, 2.5 * h);
        for (int k = 0; k < 100; ++k) {
            const double x = unif(rng);
            worst = std::max(worst, std::abs(gbf::eval(basis, 0, x, 0.0) -
                                             gbf::test::classical_cubic_bspline(x, 0, 0.0, h)));
        }
    }
    note = fmt("classical-basis max dev %.2e", worst);
    return worst <= 1e-12;
}

bool prop_fd_derivatives(std::string& note) {
    std::mt19937 rng(1003);
    double worst = 0.0;
    for (double lam : {-1.0, 0.0, 0.7, 3.0}) {
        for (double h : {0.25, 1.0}) {
            const gbf::ExtendedCubicBasis basis(lam, h);
            std::uniform_real_distribution<double> unif(-2.0 * h, 2.0 * h);
            int accepted = 0;
            while (accepted < 200) {
                const double x = unif(rng);
                const double cell_pos = std::fmod(std::abs(x), h) / h;
                if (std::min(cell_pos, 1.0 - cell_pos) < 1e-3) {
                    continue;
                }
                ++accepted;
                const double fd1 = gbf::test::blend_fd1(lam, h, 0, x, 0.0);
                const double fd2 = gbf::test::blend_fd2(lam, h, 0, x, 0.0);
                const double r1 = std::abs(gbf::eval_d1(basis, 0, x, 0.0) - fd1) /
                                  std::max(std::abs(fd1), 1e-2 / h);
                const double r2 = std::abs(gbf::eval_d2(basis, 0, x, 0.0) - fd2) /
                                  std::max(std::abs(fd2), 1e-2 / (h * h));
                worst = std::max({worst, r1, r2});
            }
        }
    }
    note = fmt("finite-difference derivative rel dev %.2e", worst);
    return worst <= 1e-5;
}

bool prop_thomas_vs_dense(std::string& note) {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> size(3, 64);
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> slack(0.5, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index m = size(rng);
        gbf::TridiagonalSystem sys;
        sys.lower.resize(m - 1);
        sys.upper.resize(m - 1);
        sys.main.resize(m);
        sys.rhs.resize(m);
        for (Eigen::Index i = 0; i < m - 1; ++i) {
            sys.lower[i] = off(rng);
            sys.upper[i] = off(rng);
        }
        for (Eigen::Index i = 0; i < m; ++i) {
            double row = 0.0;
            if (i > 0) {
                row += std::abs(sys.lower[i - 1]);
            }
            if (i + 1 < m) {
                row += std::abs(sys.upper[i]);
            }
            sys.main[i] = row + slack(rng);
            sys.rhs[i] = off(rng);
        }
        const Eigen::VectorXd xt = gbf::solve_thomas(sys);
        const Eigen::VectorXd xd = gbf::solve_dense_oracle(sys);
        const double scale = std::max(1.0, xd.lpNorm<Eigen::Infinity>());
        worst = std::max(worst, (xt - xd).lpNorm<Eigen::Infinity>() / scale);
    }
    note = fmt("thomas-vs-dense rel dev %.2e over 200 systems", worst);
    return worst <= 1e-11;
}

bool prop_zero_dynamics(std::string& note) {
    const gbf::UniformMesh mesh(0.0, 1.0, 16);
    gbf::InitialData data;
    data.u0 = [](double x) { return std::sin(3.0 * x) + 0.1; };
    data.du0 = [](double x) { return 3.0 * std::cos(3.0 * x); };
    gbf::SplineField f = gbf::fit_initial(mesh, 0.0, data);
    const gbf::StepParams p(0.0, 0.0, 0.0, 1, 1e-3);
    const double bl = gbf::value_at_knot(f, 0);
    const double br = gbf::value_at_knot(f, 16);
    double worst = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const Eigen::VectorXd before = f.coeffs();
        f = gbf::step(f, p, bl, br);
        worst = std::max(worst, (f.coeffs() - before).lpNorm<Eigen::Infinity>());
    }
    note = fmt("zero-dynamics per-step drift %.2e over 1000 steps", worst);
    return worst <= 1e-13;
}

bool prop_equilibrium(std::string& note) {
    double worst = 0.0;
    for (int q : {1, 2, 4}) {
        for (double eta : {1.0, 10.0}) {
            for (double transport : {0.0, 1.0}) {
                const gbf::UniformMesh mesh(0.0, 1.0, 12);
                gbf::SplineField f(mesh, 0.0, Eigen::VectorXd::Ones(15));
                const gbf::StepParams p(transport, transport, eta, q, 1e-3);
                for (int s = 0; s < 1000; ++s) {
                    f = gbf::step(f, p, 1.0, 1.0);
                }
                for (Eigen::Index i = 0; i <= 12; ++i) {
                    worst = std::max(worst, std::abs(gbf::value_at_knot(f, i) - 1.0));
                }
            }
        }
    }
    note = fmt("equilibrium max dev %.2e after 1000 steps", worst);
    return worst <= 1e-10;
}

bool prop_boundary_exactness(std::string& note) {
    const auto prob = gbf::example1(0.1, -0.0025, 1);
    const gbf::UniformMesh mesh(prob.a, prob.b, 16);
    gbf::SplineField f = gbf::fit_initial(mesh, 0.0, prob.initial);
    const gbf::StepParams p(prob.alpha, prob.mu, prob.eta, prob.q, 1e-4);
    double worst = 0.0;
    for (int s = 1; s <= 1000; ++s) {
        const double t = static_cast<double>(s) * p.dt;
        const auto [bl, br] = prob.bc(t);
        f = gbf::step(f, p, bl, br);
        worst = std::max({worst, std::abs(gbf::value_at_knot(f, 0) - bl),
                          std::abs(gbf::value_at_knot(f, 16) - br)});
    }
    note = fmt("boundary reproduction max dev %.2e over 1000 steps", worst);
    return worst <= 1e-11;
}

bool prop_pde_residual(std::string& note) {
    std::mt19937 rng(271828);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    struct Prm {
        double alpha;
        double eta;
        int q;
    };
    double worst_res = 0.0;
    double worst_dev = 0.0;
    for (const Prm prm : {Prm{0.1, -0.0025, 1}, Prm{0.1, -0.0025, 2}, Prm{0.1, -0.0025, 4},
                          Prm{1.0, 1.0, 1}}) {
        const auto p = gbf::example1(prm.alpha, prm.eta, prm.q);
        const long double a = prm.alpha;
        const long double e = prm.eta;
        const long double qp1 = static_cast<long double>(prm.q + 1);
        const long double c = a / qp1 + e * qp1 / a;
        const long double k = -a * static_cast<long double>(prm.q) / (2.0L * qp1);
        auto wave = [&](long double x, long double t) {
            return powl(0.5L + 0.5L * tanhl(k * (x - c * t)), 1.0L / static_cast<long double>(prm.q));
        };
        for (int trial = 0; trial < 200; ++trial) {
            const double x = unif(rng);
            const double t = unif(rng);
            worst_dev = std::max(
                worst_dev, std::abs(p.exact(x, t) - static_cast<double>(wave(x, t))));
            const long double s = 1e-5L;
            const long double u = wave(x, t);
            const long double ut = (wave(x, t + s) - wave(x, t - s)) / (2.0L * s);
            const long double uxp = wave(x + s, t);
            const long double uxm = wave(x - s, t);
            const long double ux = (uxp - uxm) / (2.0L * s);
            const long double uxx = (uxp - 2.0L * u + uxm) / (s * s);
            long double uq = 1.0L;
            for (int j = 0; j < prm.q; ++j) {
                uq *= u;
            }
            const long double res = ut + a * uq * ux - uxx - e * u * (1.0L - uq);
            worst_res = std::max(worst_res, std::abs(static_cast<double>(res)));
        }
    }
    note = fmt("wave residual %.2e, formula dev %.2e", worst_res, worst_dev);
    return worst_res <= 1e-6 && worst_dev <= 1e-13;
}

bool prop_temporal_order(std::string& note) {
    // Temporal order isolated by differencing against a dt=1.25e-4 reference
    // on the same mesh: the spatial error (~9e-9 at N=64, comparable to the
    // temporal part at dt=2e-3) is identical in both runs and cancels.
    auto run = [&](double dt) { return run_example1(1.0, 1.0, 1, 64, dt, 0.5, {0.5}, 0.0); };
    const auto ref = run(1.25e-4);
    const Eigen::VectorXd& rv = ref.snapshots[0].knot_values;
    auto diff_at = [&](double dt) {
        return (run(dt).snapshots[0].knot_values - rv).cwiseAbs().maxCoeff();
    };
    const double d_coarse = diff_at(4e-3);
    const double d_fine = diff_at(2e-3);
    const double spatial_floor = ref.errors[0].second;
    const bool subdominant = d_coarse >= 3.0 * spatial_floor && d_fine > 1e-10;
    const double order = std::log2(d_coarse / d_fine);
    note = fmt("temporal order %.3f (temporal %.1e vs spatial floor %.1e)", order, d_coarse,
               spatial_floor);
    return subdominant && order >= 1.6 && order <= 2.4;
}

void criterion5() {
    using Prop = bool (*)(std::string&);
    const std::pair<const char*, Prop> props[] = {
        {"partition-of-unity", prop_partition_of_unity},
        {"c2-junctions", prop_c2_junctions},
        {"classical-limit", prop_classical_limit},
        {"fd-derivatives", prop_fd_derivatives},
        {"thomas-vs-dense", prop_thomas_vs_dense},
        {"zero-dynamics", prop_zero_dynamics},
        {"equilibrium", prop_equilibrium},
        {"boundary-exactness", prop_boundary_exactness},
        {"pde-residual", prop_pde_residual},
        {"temporal-order", prop_temporal_order},
    };
    bool pass = true;
    std::string first_failure;
    for (const auto& [name, fn] : props) {
        std::string detail;
        const bool ok = fn(detail);
        std::printf("  property %-20s %s  %s\n", name, ok ? "ok " : "FAIL", detail.c_str());
        if (!ok) {
            pass = false;
            if (first_failure.empty()) {
                first_failure = name;
            }
        }
    }
    report(5, "scheme invariants and dual-route checks", pass,
           pass ? "10 properties" : ("first failure: " + first_failure));
}

void criterion6() {
    bool pass = true;
    std::string detail;

    // Gaussian pulse under four parameter sets stays bounded.
    struct Prm {
        double alpha;
        double eta;
        double mu;
    };
    double worst_mag = 0.0;
    std::string worst_set;
    for (const Prm prm : {Prm{0.0, 1.0, 0.1}, Prm{1.0, 0.02, 0.02}, Prm{1.0, 0.02, 0.002},
                          Prm{1.0, 0.02, 0.0002}}) {
        auto prob = gbf::example2();
        prob.alpha = prm.alpha;
        prob.eta = prm.eta;
        prob.mu = prm.mu;
        const gbf::UniformMesh mesh(prob.a, prob.b, 80);
        const gbf::SplineField f0 = gbf::fit_initial(mesh, 0.0, prob.initial);
        const gbf::StepParams p(prob.alpha, prob.mu, prob.eta, prob.q, 1e-3);
        const auto rep = gbf::integrate(f0, p, prob.bc, 1.5, {1.5});
        const Eigen::VectorXd& u = rep.snapshots.at(0).knot_values;
        if (!u.allFinite()) {
            pass = false;
        }
        const double mag = u.cwiseAbs().maxCoeff();
        if (mag > worst_mag) {
            worst_mag = mag;
            worst_set = fmt("alpha=%g eta=%g mu=%g", prm.alpha, prm.eta, prm.mu);
        }
    }
    if (worst_mag > 2.0) {
        pass = false;
    }

    // Decaying hump: homogeneous boundaries and diffusive decay.
    double worst_bc = 0.0;
    double first_max = 0.0;
    double last_max = 0.0;
    for (const double mu : {0.25, 0.0625, 0.015625, 0.00390625}) {
        auto prob = gbf::example3();
        prob.mu = mu;
        const gbf::UniformMesh mesh(prob.a, prob.b, 40);
        const gbf::SplineField f0 = gbf::fit_initial(mesh, 0.0, prob.initial);
        const gbf::StepParams p(prob.alpha, prob.mu, prob.eta, prob.q, 1e-3);
        const auto rep = gbf::integrate(f0, p, prob.bc, 0.9, {0.1, 0.3, 0.6, 0.9});
        for (const gbf::Snapshot& snap : rep.snapshots) {
            worst_bc = std::max({worst_bc, std::abs(snap.knot_values[0]),
                                 std::abs(snap.knot_values[40])});
        }
        if (mu == 0.25) {
            first_max = rep.snapshots.front().knot_values.cwiseAbs().maxCoeff();
            last_max = rep.snapshots.back().knot_values.cwiseAbs().maxCoeff();
        }
    }
    if (worst_bc > 1e-11) {
        pass = false;
    }
    if (!(last_max < first_max)) {
        pass = false;
    }
    detail = fmt("pulse max |U| %.3f (%s); hump bc dev %.1e, peak %.3f -> %.3f", worst_mag,
                 worst_set.c_str(), worst_bc, first_max, last_max);
    report(6, "qualitative studies stay bounded and decay", pass, detail);
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    std::printf("acceptance: %d/6 criteria passed in %.2f s\n", 6 - failures,
                seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
