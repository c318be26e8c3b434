#include <stokes/stokes_coeffs.hpp>

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace stokes;

TEST_CASE("coefficients at kappa = 1")
{
    const StokesCoefficients c = stokes_coeffs(1.0);
    const double S = std::sinh(1.0);
    const double C = std::cosh(1.0);
    CHECK(c.eta1_amp == doctest::Approx(S));
    CHECK(c.psi1_amp == doctest::Approx(C));
    CHECK(c.mu0 == doctest::Approx(1.0 / std::tanh(1.0)));
    // 40-digit reference values
    CHECK(c.mu2 == doctest::Approx(-4.058163530478721).epsilon(1e-14));
    CHECK(c.a2_mean == doctest::Approx(-3.1514484285169663).epsilon(1e-14));
    CHECK(c.a2_2 == doctest::Approx(-4.8458209584597486).epsilon(1e-14));
    CHECK(c.V1_amp == doctest::Approx(C));
    CHECK(c.V2_mean == doctest::Approx(S * S / 2));
    CHECK(c.a1_amp == doctest::Approx(-S));
}

TEST_CASE("kappa scaling of the coefficients")
{
    for (double k : {0.3, 1.7}) {
        const StokesCoefficients c = stokes_coeffs(k);
        const double S = std::sinh(k);
        const double C = std::cosh(k);
        const double T = std::tanh(k);
        CHECK(c.eta2_mean == doctest::Approx(-k * T / 4));
        CHECK(c.eta2_2 == doctest::Approx(k * (2 + std::cosh(2 * k)) / (4 * T)));
        CHECK(c.V2_2 == doctest::Approx(k * k * (2 * std::pow(S, 4) + 6 * S * S + 3) / (4 * S * S)));
        CHECK(c.a1_amp == doctest::Approx(-k * k * S));
        CHECK(c.a2_2 == doctest::Approx(-k * k * k * (C * C + 5) / (2 * T)));
    }
}

TEST_CASE("second harmonics are half the cos 2 amplitudes")
{
    const StokesCoefficients c = stokes_coeffs(0.8);
    const SecondHarmonicCoeffs h = second_harmonics(0.8);
    CHECK(h.eta2_m2 == doctest::Approx(c.eta2_2 / 2));
    CHECK(h.V2_m2 == doctest::Approx(c.V2_2 / 2));
    CHECK(h.a2_m2 == doctest::Approx(c.a2_2 / 2));
    CHECK(h.eta1sq_m2 == doctest::Approx(std::sinh(0.8) * std::sinh(0.8) / 4));
}

TEST_CASE("interval coefficients enclose the floating ones")
{
    const auto ci = stokes_coeffs(Interval(1.0));
    const StokesCoefficients c = stokes_coeffs(1.0);
    CHECK(ci.mu2.contains(c.mu2));
    CHECK(ci.a2_mean.contains(c.a2_mean));
    CHECK(ci.mu2.width() < 1e-13);
}

TEST_CASE("nonpositive kappa rejected")
{
    CHECK_THROWS_AS(stokes_coeffs(0.0), std::domain_error);
    CHECK_THROWS_AS(stokes_coeffs(Interval(-1.0)), std::domain_error);
}
