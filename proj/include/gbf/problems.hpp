#pragma once

#include <string>

#include "gbf/cn_stepper.hpp"
#include "gbf/initial_fit.hpp"

namespace gbf {

/// Complete statement of a benchmark run: PDE coefficients, domain, initial
/// profile, Dirichlet data, and the exact solution when one is known.
struct ProblemSpec {
    std::string name;
    double alpha = 0.0;
    double mu = 1.0;
    double eta = 0.0;
    int q = 1;
    double a = 0.0;
    double b = 1.0;
    InitialData initial;
    BoundaryFn bc;
    ExactFn exact;  // null when the problem has no closed form
};

/// Speed c = alpha/(q+1) + eta*(q+1)/alpha of the travelling-wave solution.
/// Preconditions: alpha != 0, q >= 1.
double wave_speed(double alpha, double eta, int q);

/// Travelling-wave benchmark with exact solution
/// u(x,t) = (1/2 + 1/2*tanh(k(x - ct)))^(1/q), k = -alpha*q/(2(q+1)), on
/// [0, 1] with mu = 1; boundary data sampled from the exact solution.
ProblemSpec example1(double alpha, double eta, int q);

/// Gaussian initial profile u0 = exp(-40 x^2) on [0, 1], q = 1, no closed
/// form; Dirichlet values frozen from the initial profile (1 and exp(-40)).
/// alpha, mu, eta are whatever the caller assigns afterwards.
ProblemSpec example2();

/// Polynomial initial profile u0 = x(1 - x^2) on [0, 1] with alpha = 1,
/// eta = 0, q = 1, homogeneous Dirichlet data, no closed form; mu is
/// whatever the caller assigns afterwards.
ProblemSpec example3();

}  // namespace gbf
