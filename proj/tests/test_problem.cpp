#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "specstep/problem.hpp"
#include "test_support.hpp"

using specstep::QuadraticProblem;

TEST_CASE("log spectrum benchmark ladder") {
    const QuadraticProblem p = QuadraticProblem::log_spectrum(10, 4.0);
    REQUIRE(p.dimension() == 10);
    CHECK(p.spectrum()[0] == doctest::Approx(1e4).epsilon(1e-12));
    CHECK(p.spectrum()[9] == 1.0);
    CHECK(p.spectrum()[8] == doctest::Approx(2.7825594022071245).epsilon(1e-12));
    CHECK(p.condition_number() == doctest::Approx(1e4).epsilon(1e-10));
    for (int i = 0; i + 1 < 10; ++i) {
        CHECK(p.spectrum()[i] >= p.spectrum()[i + 1]);
    }
    CHECK(p.minimizer() == std::vector<double>(10, 1.0));
}

TEST_CASE("log spectrum degenerate cases") {
    const QuadraticProblem flat = QuadraticProblem::log_spectrum(4, 0.0);
    for (double lam : flat.spectrum()) CHECK(lam == 1.0);

    const QuadraticProblem two = QuadraticProblem::log_spectrum(2, std::log10(7.0));
    CHECK(two.spectrum()[0] == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(two.spectrum()[1] == 1.0);

    CHECK_THROWS_AS(QuadraticProblem::log_spectrum(1, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticProblem::log_spectrum(0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticProblem::log_spectrum(10, -1.0), std::invalid_argument);
}

TEST_CASE("gradient and objective on small instances") {
    const QuadraticProblem one = QuadraticProblem::from_spectrum({2.0}, {0.0});
    CHECK(one.gradient(std::vector<double>{1.0})[0] == 2.0);
    CHECK(one.objective(std::vector<double>{1.0}) == 1.0);

    const QuadraticProblem two = QuadraticProblem::from_spectrum({2.0, 1.0}, {0.0, 0.0});
    const std::vector<double> x{1.0, 1.0};
    const std::vector<double> g = two.gradient(x);
    CHECK(g[0] == 2.0);
    CHECK(g[1] == 1.0);
    CHECK(two.objective(x) == 1.5);

    // Gradient at the minimizer vanishes exactly in the diagonal backing.
    const std::vector<double> g0 = two.gradient(two.minimizer());
    CHECK(g0[0] == 0.0);
    CHECK(g0[1] == 0.0);
    CHECK(two.objective(two.minimizer()) == 0.0);
}

TEST_CASE("dimension and spectrum validation") {
    const QuadraticProblem p = QuadraticProblem::from_spectrum({2.0, 1.0}, {0.0, 0.0});
    CHECK_THROWS_AS(p.gradient(std::vector<double>{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(p.objective(std::vector<double>{1.0, 2.0, 3.0}), std::invalid_argument);

    CHECK_THROWS_AS(QuadraticProblem::from_spectrum({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticProblem::from_spectrum({1.0, -2.0}, {0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(QuadraticProblem::from_spectrum({1.0, 0.0}, {0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(QuadraticProblem::from_spectrum({1.0}, {0.0, 0.0}),
                    std::invalid_argument);

    // Unsorted user input is accepted and sorted nonincreasing.
    const QuadraticProblem s = QuadraticProblem::from_spectrum({1.0, 5.0, 3.0},
                                                               {0.0, 0.0, 0.0});
    CHECK(s.spectrum() == std::vector<double>{5.0, 3.0, 1.0});
    CHECK(s.lambda_max() == 5.0);
    CHECK(s.lambda_min() == 1.0);
}

TEST_CASE("objective nonnegativity and Rayleigh containment") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const QuadraticProblem p = testsupport::random_problem(rng, 20, 5.0);
        std::vector<double> x(p.dimension());
        for (double& v : x) v = testsupport::uniform(rng, -5.0, 5.0);
        CHECK(p.objective(x) >= 0.0);
        const std::vector<double> g = p.gradient(x);
        double gg = 0.0;
        for (double v : g) gg += v * v;
        if (gg > 0.0) {
            const double r = p.rayleigh_quotient(g);
            CHECK(r >= p.lambda_min() * (1.0 - 1e-12));
            CHECK(r <= p.lambda_max() * (1.0 + 1e-12));
            const double r2 = p.squared_rayleigh_quotient(g);
            CHECK(r2 >= p.lambda_min() * (1.0 - 1e-12));
            CHECK(r2 <= p.lambda_max() * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("dense problems keep the known spectrum") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const QuadraticProblem p = testsupport::random_dense_problem(rng, 8, 3.0);
        REQUIRE(p.has_dense_hessian());
        std::vector<double> v(p.dimension());
        for (double& w : v) w = testsupport::uniform(rng, -1.0, 1.0);
        double vv = 0.0;
        for (double w : v) vv += w * w;
        if (vv == 0.0) continue;
        const double r = p.rayleigh_quotient(v);
        CHECK(r >= p.lambda_min() * (1.0 - 1e-10));
        CHECK(r <= p.lambda_max() * (1.0 + 1e-10));
        // Gradient at the minimizer is zero to rounding.
        for (double gi : p.gradient(p.minimizer())) {
            CHECK(std::abs(gi) <= 1e-12 * p.lambda_max());
        }
    }
}

TEST_CASE("dense symmetry validation") {
    // 2x2 asymmetric beyond tolerance.
    CHECK_THROWS_AS(QuadraticProblem::from_dense({2.0, 0.5, 0.2, 1.0}, {2.2, 0.8},
                                                 {0.0, 0.0}),
                    std::invalid_argument);
    // Asymmetry inside the 1e-12 relative band is symmetrized.
    const QuadraticProblem p = QuadraticProblem::from_dense(
        {2.0, 0.5, 0.5 + 1e-14, 1.0}, {2.2071067811865475, 0.7928932188134523},
        {0.0, 0.0});
    CHECK(p.has_dense_hessian());
    CHECK_THROWS_AS(QuadraticProblem::from_dense({1.0, 0.0, 0.0}, {1.0, 1.0},
                                                 {0.0, 0.0}),
                    std::invalid_argument);
    // A spectrum that cannot belong to the matrix (diagonal leaves the
    // claimed interval) is rejected.
    CHECK_THROWS_AS(QuadraticProblem::from_dense({5.0, 0.0, 0.0, 5.0}, {2.0, 1.0},
                                                 {0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("eigenvector action of a rotated Hessian") {
    // A = G' D G for one Givens rotation: columns of G' are eigenvectors.
    const double c = std::cos(0.3);
    const double s = std::sin(0.3);
    const double l1 = 4.0;
    const double l2 = 1.0;
    // G'DG entries for the (0,1) plane rotation.
    const std::vector<double> a{c * c * l1 + s * s * l2, c * s * (l2 - l1),
                                c * s * (l2 - l1), s * s * l1 + c * c * l2};
    const QuadraticProblem p =
        QuadraticProblem::from_dense(a, {l1, l2}, {0.0, 0.0});
    const std::vector<double> v{c, -s};  // eigenvector for l1
    const std::vector<double> av = p.apply_hessian(v);
    CHECK(av[0] == doctest::Approx(l1 * v[0]).epsilon(1e-12));
    CHECK(av[1] == doctest::Approx(l1 * v[1]).epsilon(1e-12));
    CHECK(p.rayleigh_quotient(v) == doctest::Approx(l1).epsilon(1e-12));
}
