#include <doctest.h>

#include <cmath>

#include "gbf/errors.hpp"
#include "gbf/initial_fit.hpp"
#include "gbf/problems.hpp"

using gbf::InitialData;
using gbf::SplineField;
using gbf::UniformMesh;
using gbf::fit_initial;

TEST_SUITE("initial_fit") {

TEST_CASE("constant profiles reproduce the constant everywhere") {
    const UniformMesh mesh(0.0, 1.0, 8);
    for (double c : {1.0, -2.5, 0.0}) {
        InitialData data;
        data.u0 = [c](double) { return c; };
        data.du0 = [](double) { return 0.0; };
        for (double lam : {-1.0, 0.0, 0.5, 1.0}) {
            const SplineField f = fit_initial(mesh, lam, data);
            for (Eigen::Index i = -1; i <= 9; ++i) {
                CHECK(std::abs(f.coeff(i) - c) <= 1e-12 * (1.0 + std::abs(c)));
            }
            for (Eigen::Index i = 0; i <= 8; ++i) {
                CHECK(std::abs(gbf::value_at_knot(f, i) - c) <= 1e-12 * (1.0 + std::abs(c)));
            }
        }
    }
}

TEST_CASE("linear profile is reproduced exactly by the cubic fit") {
    const UniformMesh mesh(0.0, 1.0, 10);
    InitialData data;
    data.u0 = [](double x) { return x; };
    data.du0 = [](double) { return 1.0; };
    const SplineField f = fit_initial(mesh, 0.0, data);
    for (Eigen::Index i = 0; i <= 10; ++i) {
        CHECK(std::abs(gbf::value_at_knot(f, i) - mesh.knot(i)) <= 1e-12);
    }
    Eigen::VectorXd mid(1);
    mid[0] = 0.5 * (mesh.knot(4) + mesh.knot(5));
    CHECK(std::abs(gbf::eval_profile(f, mid)[0] - mid[0]) <= 1e-12);
    CHECK(std::abs(gbf::deriv_at_knot(f, 0) - 1.0) <= 1e-12);
    CHECK(std::abs(gbf::deriv_at_knot(f, 10) - 1.0) <= 1e-12);
}

TEST_CASE("interpolation and end-slope residuals on a traveling-wave profile") {
    const auto prob = gbf::example1(0.1, -0.0025, 1);
    const UniformMesh mesh(prob.a, prob.b, 16);
    for (double lam : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const SplineField f = fit_initial(mesh, lam, prob.initial);
        for (Eigen::Index i = 0; i <= 16; ++i) {
            CHECK(std::abs(gbf::value_at_knot(f, i) - prob.initial.u0(mesh.knot(i))) <= 1e-11);
        }
        CHECK(std::abs(gbf::deriv_at_knot(f, 0) - prob.initial.du0(prob.a)) <= 1e-11);
        CHECK(std::abs(gbf::deriv_at_knot(f, 16) - prob.initial.du0(prob.b)) <= 1e-11);
    }
}

TEST_CASE("coefficients vary continuously in lambda") {
    const UniformMesh mesh(0.0, 1.0, 12);
    InitialData data;
    data.u0 = [](double x) { return std::sin(3.0 * x) + 0.25 * x; };
    data.du0 = [](double x) { return 3.0 * std::cos(3.0 * x) + 0.25; };
    const SplineField base = fit_initial(mesh, 0.0, data);
    const SplineField near = fit_initial(mesh, 1e-9, data);
    CHECK((base.coeffs() - near.coeffs()).lpNorm<Eigen::Infinity>() <= 1e-8);
}

TEST_CASE("finite-difference fallback recovers the end slopes") {
    const UniformMesh mesh(0.0, 1.0, 16);
    InitialData data;
    data.u0 = [](double x) { return std::sin(2.0 * x); };
    // du0 deliberately left empty.
    const SplineField f = fit_initial(mesh, 0.0, data);
    for (Eigen::Index i = 0; i <= 16; ++i) {
        CHECK(std::abs(gbf::value_at_knot(f, i) - std::sin(2.0 * mesh.knot(i))) <= 1e-11);
    }
    CHECK(std::abs(gbf::deriv_at_knot(f, 0) - 2.0) <= 1e-7);
    CHECK(std::abs(gbf::deriv_at_knot(f, 16) - 2.0 * std::cos(2.0)) <= 1e-7);
}

TEST_CASE("invalid inputs and degenerate bases are rejected") {
    const UniformMesh mesh(0.0, 1.0, 8);
    {
        InitialData data;  // missing u0
        CHECK_THROWS_AS(fit_initial(mesh, 0.0, data), gbf::InvalidInputError);
    }
    {
        InitialData data;
        data.u0 = [](double) { return std::nan(""); };
        CHECK_THROWS_AS(fit_initial(mesh, 0.0, data), gbf::InvalidInputError);
    }
    {
        // lambda = -8 zeroes the diagonal weight; the pivotless solve stalls.
        InitialData data;
        data.u0 = [](double x) { return x; };
        data.du0 = [](double) { return 1.0; };
        CHECK_THROWS_AS(fit_initial(mesh, -8.0, data), gbf::SingularSystemError);
    }
}

}  // TEST_SUITE
