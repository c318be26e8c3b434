#include <stokes/jet.hpp>

#include <doctest.h>

#include <cmath>

using stokes::Interval;
using J = stokes::Jet<double>;
using JI = stokes::Jet<Interval>;

TEST_CASE("order is checked")
{
    CHECK_THROWS_AS(J(1.0, 9), std::invalid_argument);
    CHECK_THROWS_AS(J(1.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(J::variable(1.0, 2) + J::variable(1.0, 3), std::invalid_argument);
    CHECK(J(1.0, 0).order() == 0);
}

TEST_CASE("variable and constant")
{
    const J x = J::variable(0.7, 4);
    CHECK(x[0] == 0.7);
    CHECK(x[1] == 1.0);
    CHECK(x[2] == 0.0);
    const J c = J::constant(2.0, 4);
    CHECK(c[1] == 0.0);
}

TEST_CASE("exp jet has all derivatives equal")
{
    const J e = exp(J::variable(0.7, 8));
    for (int k = 0; k <= 8; ++k) {
        CHECK(e[k] == doctest::Approx(std::exp(0.7)).epsilon(1e-14));
    }
}

TEST_CASE("reciprocal derivatives")
{
    const double x0 = 1.3;
    const J r = 1.0 / J::variable(x0, 8);
    double fact = 1.0;
    for (int k = 0; k <= 8; ++k) {
        if (k > 0) {
            fact *= k;
        }
        const double expect = (k % 2 ? -1.0 : 1.0) * fact / std::pow(x0, k + 1);
        CHECK(r[k] == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("product rule")
{
    // (x^2 e^x)'' = (x^2 + 4x + 2) e^x
    const double x0 = 0.4;
    const J x = J::variable(x0, 3);
    const J f = x * x * exp(x);
    CHECK(f[2] == doctest::Approx((x0 * x0 + 4 * x0 + 2) * std::exp(x0)).epsilon(1e-14));
    CHECK(f[3] == doctest::Approx((x0 * x0 + 6 * x0 + 6) * std::exp(x0)).epsilon(1e-14));
}

TEST_CASE("sqrt derivatives")
{
    const double x0 = 2.5;
    const J s = sqrt(J::variable(x0, 3));
    CHECK(s[1] == doctest::Approx(0.5 / std::sqrt(x0)));
    CHECK(s[2] == doctest::Approx(-0.25 * std::pow(x0, -1.5)));
    CHECK(s[3] == doctest::Approx(0.375 * std::pow(x0, -2.5)));
}

TEST_CASE("hyperbolic jets")
{
    const double x0 = 0.9;
    const J x = J::variable(x0, 8);
    const J s = sinh(x);
    const J c = cosh(x);
    for (int k = 0; k <= 8; ++k) {
        CHECK(s[k] == doctest::Approx(k % 2 ? std::cosh(x0) : std::sinh(x0)).epsilon(1e-14));
        CHECK(c[k] == doctest::Approx(k % 2 ? std::sinh(x0) : std::cosh(x0)).epsilon(1e-14));
    }
    const double t = std::tanh(x0);
    const J th = tanh(x);
    CHECK(th[1] == doctest::Approx(1 - t * t));
    CHECK(th[2] == doctest::Approx(-2 * t * (1 - t * t)));
    CHECK(th[3] == doctest::Approx(-2 * (1 - t * t) * (1 - 3 * t * t)));
}

TEST_CASE("composition chain rule")
{
    // d/dx exp(2x) at 0 up to order 6
    const J e = exp(2.0 * J::variable(0.0, 6));
    for (int k = 0; k <= 6; ++k) {
        CHECK(e[k] == doctest::Approx(std::pow(2.0, k)));
    }
}

TEST_CASE("interval jets enclose the double jets")
{
    const Interval x0(0.9);
    const JI x = JI::variable(x0, 6);
    const JI f = tanh(x) * exp(x) / sqrt(x + Interval(1.0));
    const J xd = J::variable(0.9, 6);
    const J fd = tanh(xd) * exp(xd) / sqrt(xd + 1.0);
    for (int k = 0; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(f[k].lo() <= fd[k] + 1e-12 * std::fabs(fd[k]));
        CHECK(f[k].hi() >= fd[k] - 1e-12 * std::fabs(fd[k]));
        CHECK(f[k].width() < 1e-12 * (1 + std::fabs(fd[k])));
    }
}

TEST_CASE("interval jets over a box enclose derivatives at every point")
{
    const Interval box(0.5, 0.6);
    const JI f = exp(JI::variable(box, 3)) * JI::variable(box, 3);
    for (double p : {0.5, 0.55, 0.6}) {
        // (x e^x)''' = (x + 3) e^x
        CHECK(f[3].contains((p + 3) * std::exp(p)));
    }
}
