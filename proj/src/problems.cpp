#include "gbf/problems.hpp"

#include <cmath>
#include <string>

namespace gbf {

double wave_speed(double alpha, double eta, int q) {
    if (!std::isfinite(alpha) || !std::isfinite(eta)) {
        throw InvalidInputError("wave speed parameters must be finite");
    }
    if (alpha == 0.0) {
        throw InvalidInputError("wave speed undefined for alpha = 0");
    }
    if (q < 1) {
        throw InvalidInputError("q must be a positive integer, got " + std::to_string(q));
    }
    const double qp1 = static_cast<double>(q + 1);
    return alpha / qp1 + eta * qp1 / alpha;
}

ProblemSpec example1(double alpha, double eta, int q) {
    const double c = wave_speed(alpha, eta, q);
    const double k = -alpha * static_cast<double>(q) / (2.0 * static_cast<double>(q + 1));
    const double inv_q = 1.0 / static_cast<double>(q);

    ProblemSpec p;
    p.name = "example1";
    p.alpha = alpha;
    p.mu = 1.0;
    p.eta = eta;
    p.q = q;
    p.a = 0.0;
    p.b = 1.0;
    p.exact = [k, c, inv_q](double x, double t) {
        return std::pow(0.5 + 0.5 * std::tanh(k * (x - c * t)), inv_q);
    };
    p.initial.u0 = [exact = p.exact](double x) { return exact(x, 0.0); };
    p.initial.du0 = [k, inv_q](double x) {
        const double base = 0.5 + 0.5 * std::tanh(k * x);
        const double sech = 1.0 / std::cosh(k * x);
        return inv_q * std::pow(base, inv_q - 1.0) * 0.5 * k * sech * sech;
    };
    p.bc = [exact = p.exact, a = p.a, b = p.b](double t) {
        return std::make_pair(exact(a, t), exact(b, t));
    };
    return p;
}

ProblemSpec example2() {
    ProblemSpec p;
    p.name = "example2";
    p.alpha = 0.0;
    p.mu = 1.0;
    p.eta = 0.0;
    p.q = 1;
    p.a = 0.0;
    p.b = 1.0;
    p.initial.u0 = [](double x) { return std::exp(-40.0 * x * x); };
    p.initial.du0 = [](double x) { return -80.0 * x * std::exp(-40.0 * x * x); };
    const double left = 1.0;
    const double right = std::exp(-40.0);
    p.bc = [left, right](double) { return std::make_pair(left, right); };
    return p;
}

ProblemSpec example3() {
    ProblemSpec p;
    p.name = "example3";
    p.alpha = 1.0;
    p.mu = 1.0;
    p.eta = 0.0;
    p.q = 1;
    p.a = 0.0;
    p.b = 1.0;
    p.initial.u0 = [](double x) { return x * (1.0 - x * x); };
    p.initial.du0 = [](double x) { return 1.0 - 3.0 * x * x; };
    p.bc = [](double) { return std::make_pair(0.0, 0.0); };
    return p;
}

}  // namespace gbf
