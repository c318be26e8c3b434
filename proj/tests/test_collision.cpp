#include <stokes/collision.hpp>

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace stokes;

namespace
{

const WaveParams k1 = WaveParams::from_kappa(Interval(1.0));

} // namespace

// 40-digit bracketed root finding on phi.
TEST_CASE("collision points at kappa = 1")
{
    struct Row {
        double ell, xi, sigma;
    };
    const Row rows[] = {{0.05, 0.064434396587227539, 0.014541096231001583},
                        {0.1, 0.13021284336608394, 0.02993423974956024},
                        {0.2, 0.27248319171401945, 0.06740112735881634},
                        {0.3, 0.45018143320774736, 0.1261012037946301}};
    for (const Row &r : rows) {
        CAPTURE(r.ell);
        const CollisionPoint p = solve_xi_plus(r.ell, k1);
        CHECK(p.xi_plus == doctest::Approx(r.xi).epsilon(1e-14));
        CHECK(p.sigma_plus == doctest::Approx(r.sigma).epsilon(1e-13));
        CHECK(p.residual < 1e-14);
        CHECK(xi_plus_enclosure(r.ell, k1).contains(r.xi));
    }
}

TEST_CASE("collision points at other depths")
{
    const WaveParams k2 = WaveParams::from_kappa(Interval(2.0));
    CHECK(solve_xi_plus(0.1, k2).xi_plus == doctest::Approx(0.11139956078192183).epsilon(1e-14));
    // Here the branch from (0,0) exceeds kappa/2; phi has a second root near 0.473.
    const WaveParams k05 = WaveParams::from_kappa(Interval(0.5));
    const CollisionPoint p = solve_xi_plus(0.1, k05);
    CHECK(p.xi_plus == doctest::Approx(0.25075574940960526).epsilon(1e-13));
    CHECK(p.xi_plus > 0.25);
    // The curve folds near ell = 0.113 for kappa = 0.5.
    CHECK_THROWS_AS(solve_xi_plus(0.12, k05), NewtonFailure);
}

TEST_CASE("the two colliding eigenvalues coincide")
{
    const CollisionPoint p = solve_xi_plus(0.17, k1);
    const double a = lambda_im(1, Branch::minus, 0.17, p.xi_plus, 1.0, k1.mu0_f());
    const double b = lambda_im(-1, Branch::plus, 0.17, p.xi_plus, 1.0, k1.mu0_f());
    CHECK(std::fabs(a - b) < 1e-13);
    CHECK(a == doctest::Approx(p.sigma_plus).epsilon(1e-13));
}

TEST_CASE("oddness and the double point")
{
    const CollisionPoint a = solve_xi_plus(0.12, k1);
    const CollisionPoint b = solve_xi_plus(-0.12, k1);
    CHECK(b.xi_plus == -a.xi_plus);
    const CollisionPoint z = solve_xi_plus(0.0, k1);
    CHECK(z.xi_plus == 0.0);
    CHECK(z.sigma_plus == 0.0);
    const Interval e = xi_plus_enclosure(-0.12, k1);
    CHECK(e.contains(b.xi_plus));
}

TEST_CASE("ell0 bound")
{
    CHECK(default_ell0(1.0) == doctest::Approx(0.3));
    CHECK_THROWS_AS(solve_xi_plus(0.31, k1), std::invalid_argument);
    CHECK_NOTHROW(solve_xi_plus(0.31, k1, 0.4));
}

TEST_CASE("expansions: error orders")
{
    const double s = xi_plus_slope(1.0);
    CHECK(s == doctest::Approx(std::sqrt(-F(1.0, 2)[1] / F(1.0, 2)[2])));
    auto err = [](double ell, int order) {
        return std::fabs(solve_xi_plus(ell, k1).xi_plus - xi_plus_expansion(ell, k1, order));
    };
    // halving ell divides the error by 2^3 and 2^5
    const double r1 = err(0.04, 1) / err(0.02, 1);
    const double r3 = err(0.08, 3) / err(0.04, 3);
    CHECK(r1 == doctest::Approx(8.0).epsilon(0.02));
    CHECK(r3 == doctest::Approx(32.0).epsilon(0.05));
    CHECK_THROWS_AS(xi_plus_expansion(0.1, k1, 2), std::invalid_argument);
}

TEST_CASE("separation of the other modes")
{
    const SeparationReport r = verify_separation(0.1, k1);
    CHECK(r.separated);
    CHECK(r.colliding_distance < 1e-13);
    CHECK(r.min_distance_n0 >= r.c0);
    CHECK(r.min_distance_other >= r.c0);
    CHECK_FALSE(verify_separation(0.0, k1).separated);
}

TEST_CASE("curve sampling: serial and parallel agree, CSV")
{
    const auto a = sample_curve_serial(k1, 0.3, 51);
    const auto b = sample_curve(k1, 0.3, 51);
    REQUIRE(a.size() == 51);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].ell == b[i].ell);
        CHECK(a[i].xi_plus == b[i].xi_plus);
    }
    CHECK(a[25].ell == 0.0);
    CHECK(a.front().ell == -0.3);
    std::ostringstream os;
    write_curve_csv(os, a);
    CHECK(os.str().rfind("ell,xi_plus,sigma_plus,residual\n", 0) == 0);
    CHECK_THROWS_AS(sample_curve(k1, 0.3, 0), std::invalid_argument);
}
