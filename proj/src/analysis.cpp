#include "gbf/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "gbf/initial_fit.hpp"

namespace gbf {

double linf_error(const Eigen::VectorXd& numeric, const Eigen::VectorXd& exact) {
    if (numeric.size() != exact.size()) {
        throw InvalidInputError("profile lengths differ: " + std::to_string(numeric.size()) +
                                " vs " + std::to_string(exact.size()));
    }
    if (numeric.size() == 0) {
        throw InvalidInputError("profiles must be non-empty");
    }
    if (!numeric.allFinite() || !exact.allFinite()) {
        throw InvalidInputError("profiles must be finite");
    }
    return (numeric - exact).lpNorm<Eigen::Infinity>();
}

std::vector<std::optional<double>> estimate_order(
    const std::vector<std::pair<double, double>>& errors_by_h) {
    if (errors_by_h.size() < 2) {
        throw InvalidInputError("order estimation needs at least two resolutions");
    }
    std::vector<std::optional<double>> orders;
    for (std::size_t k = 0; k + 1 < errors_by_h.size(); ++k) {
        const auto [h_coarse, e_coarse] = errors_by_h[k];
        const auto [h_fine, e_fine] = errors_by_h[k + 1];
        if (!(h_coarse > 0.0) || !(h_fine > 0.0) || e_coarse < 0.0 || e_fine < 0.0) {
            throw InvalidInputError("order estimation needs positive spacings and errors >= 0");
        }
        if (std::abs(h_fine - 0.5 * h_coarse) > 1e-9 * h_coarse) {
            throw InvalidInputError("spacings must halve between successive entries");
        }
        if (e_coarse == 0.0 || e_fine == 0.0) {
            orders.push_back(std::nullopt);
        } else {
            orders.push_back(std::log2(e_coarse / e_fine));
        }
    }
    return orders;
}

ScanResult scan_lambda(const ProblemSpec& problem, Eigen::Index n_cells, double dt, double t_end,
                       double lambda_lo, double lambda_hi, double lambda_step) {
    if (!problem.exact) {
        throw InvalidInputError("lambda scan requires a problem with an exact solution");
    }
    if (!std::isfinite(lambda_lo) || !std::isfinite(lambda_hi) || !std::isfinite(lambda_step)) {
        throw InvalidInputError("lambda scan bounds must be finite");
    }
    if (lambda_lo > lambda_hi) {
        throw InvalidInputError("lambda scan requires lo <= hi");
    }
    if (lambda_step <= 0.0) {
        throw InvalidInputError("lambda scan requires a positive step");
    }

    const auto count =
        static_cast<std::size_t>(std::floor((lambda_hi - lambda_lo) / lambda_step + 1e-9)) + 1;
    std::vector<ScanEntry> trace(count);

    const UniformMesh mesh(problem.a, problem.b, n_cells);
    auto run_one = [&](std::size_t k) {
        double lam = lambda_lo + static_cast<double>(k) * lambda_step;
        if (std::abs(lam) <= 1e-9 * lambda_step) {
            lam = 0.0;  // keep the lambda = 0 grid point exact
        }
        ScanEntry entry;
        entry.lambda = lam;
        try {
            const SplineField field = fit_initial(mesh, lam, problem.initial);
            const StepParams params(problem.alpha, problem.mu, problem.eta, problem.q, dt);
            const SolveReport report =
                integrate(field, params, problem.bc, t_end, {t_end}, problem.exact);
            entry.linf = report.errors.front().second;
        } catch (const Error&) {
            entry.failed = true;
        }
        trace[k] = entry;
    };

    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) {
            run_one(k);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
                    run_one(k);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    ScanResult result;
    result.trace = std::move(trace);
    bool found = false;
    for (const ScanEntry& entry : result.trace) {
        if (entry.failed) {
            continue;
        }
        const bool better =
            !found || entry.linf < result.best_error ||
            (entry.linf == result.best_error && std::abs(entry.lambda) < std::abs(result.best_lambda));
        if (better) {
            result.best_lambda = entry.lambda;
            result.best_error = entry.linf;
            found = true;
        }
    }
    if (!found) {
        throw Error("lambda scan: every run failed");
    }
    return result;
}

}  // namespace gbf
