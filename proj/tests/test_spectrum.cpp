#include <stokes/collision.hpp>
#include <stokes/dispersion.hpp>
#include <stokes/spectrum.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace stokes;

namespace
{

// Largest distance from each closed-form value to the nearest unused computed one.
double match_error(std::vector<std::complex<double>> expect, std::vector<std::complex<double>> got)
{
    double worst = 0.0;
    for (const auto &e : expect) {
        auto it = std::min_element(got.begin(), got.end(),
                                   [&](const auto &a, const auto &b) { return std::abs(a - e) < std::abs(b - e); });
        worst = std::max(worst, std::abs(*it - e));
        got.erase(it);
    }
    return worst;
}

std::vector<std::complex<double>> closed_form(int N, double kappa, double ell, double xi)
{
    const WaveParams p = WaveParams::from_kappa(Interval(kappa));
    std::vector<std::complex<double>> v;
    for (int n = -N; n <= N; ++n) {
        v.push_back(lambda(n, Branch::plus, ell, xi, p).value);
        v.push_back(lambda(n, Branch::minus, ell, xi, p).value);
    }
    return v;
}

} // namespace

TEST_CASE("assembly preconditions")
{
    CHECK_THROWS_AS(assemble(7, 1.0, 0.1, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(assemble(16, 1.0, 0.1, 0.0, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(assemble(16, 0.0, 0.1, 0.0, 0.0), std::invalid_argument);
    const BlochMatrix m = assemble(16, 1.0, 0.1, 0.05, 0.01);
    CHECK(m.dim == 66);
    CHECK(m.entries.rows() == 66);
    CHECK(m.mu_eps == doctest::Approx(1.0 / std::tanh(1.0) - 1e-4 * 4.058163530478721));
}

TEST_CASE("eps = 0: block diagonal with the closed-form eigenvalues")
{
    const BlochMatrix m = assemble(12, 1.0, 0.1, 0.05, 0.0);
    const int h = 25;
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < h; ++j) {
            if (i != j) {
                CHECK(std::abs(m.entries(i, j)) == 0.0);
                CHECK(std::abs(m.entries(i, h + j)) == 0.0);
                CHECK(std::abs(m.entries(h + i, j)) == 0.0);
            }
        }
    }
    CHECK(match_error(closed_form(12, 1.0, 0.1, 0.05), eigenvalues(m)) < 1e-12);
}

TEST_CASE("band structure")
{
    const BlochMatrix m = assemble(10, 0.8, 0.1, 0.03, 0.05);
    const int h = 21;
    for (int blk = 0; blk < 4; ++blk) {
        const int r0 = (blk / 2) * h;
        const int c0 = (blk % 2) * h;
        for (int i = 0; i < h; ++i) {
            for (int j = 0; j < h; ++j) {
                if (std::abs(i - j) > 2) {
                    CHECK(std::abs(m.entries(r0 + i, c0 + j)) == 0.0);
                }
            }
        }
    }
}

TEST_CASE("first-order G term for a constant elevation")
{
    // eta = c: G~(1)[c] = c (-G^2 - dx^2 + ell^2) on each mode, i.e. c (w^2 - w^2 tanh^2 w).
    const int M = 2;
    const Eigen::MatrixXcd E = multiplication_matrix(M, {0.0, 0.0, 0.7, 0.0, 0.0});
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            CHECK(E(i, j) == std::complex<double>(i == j ? 0.7 : 0.0));
        }
    }
    const Eigen::MatrixXcd C = multiplication_matrix(M, {0.0, 0.5, 0.0, 0.5, 0.0});
    // cos(x) shifts modes by one in both directions
    CHECK(C(1, 0) == std::complex<double>(0.5));
    CHECK(C(0, 1) == std::complex<double>(0.5));
    CHECK(C(2, 0) == std::complex<double>(0.0));
}

TEST_CASE("structured eigenvalues agree with the generic complex solver")
{
    const BlochMatrix m = assemble(10, 1.0, 0.1, 0.131, 0.02);
    const auto a = eigenvalues(m);
    const auto b = eigenvalues(m.entries);
    CHECK(match_error(a, b) < 1e-10);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = std::complex<double>(0, 2);
    d(2, 2) = -3.0;
    CHECK(match_error({1.0, std::complex<double>(0, 2), -3.0}, eigenvalues(d)) < 1e-15);
}

TEST_CASE("Hamiltonian pairing lambda -> -conj(lambda)")
{
    const BlochMatrix m = assemble(16, 1.0, 0.1, 0.1304, 0.02);
    const auto ev = eigenvalues(m);
    std::vector<std::complex<double>> mirrored;
    for (const auto &l : ev) {
        mirrored.push_back(-std::conj(l));
    }
    CHECK(match_error(mirrored, ev) < 1e-8);
}

TEST_CASE("eps = 0 scan has no growth")
{
    ScanOptions o;
    o.N = 12;
    o.n_xi = 11;
    const GrowthScan g = growth_scan(1.0, 0.1, 0.0, o);
    CHECK(g.best.max_growth <= 1e-12);
}

TEST_CASE("growth scan at the default point matches the prediction")
{
    ScanOptions o;
    o.N = 16;
    const GrowthScan g = growth_scan(1.0, 0.1, 0.01, o);
    CHECK(g.xi_plus == doctest::Approx(0.13021284336608394));
    // independent numpy Galerkin prototype, N = 24: 4.5114e-5
    CHECK(g.best.max_growth == doctest::Approx(4.5114e-5).epsilon(0.01));
    CHECK(g.best.max_growth / g.predicted_C == doctest::Approx(1.0).epsilon(0.2));
    CHECK(std::fabs(g.best.xi - g.xi_plus) < 0.3 * 0.1);

    o.n_xi = 41;
    const GrowthScan s = growth_scan_serial(1.0, 0.1, 0.01, o);
    const GrowthScan p = growth_scan(1.0, 0.1, 0.01, o);
    CHECK(s.best.max_growth == p.best.max_growth);
    CHECK(s.best.xi == p.best.xi);

    std::ostringstream os;
    write_spectrum_csv(os, {s});
    CHECK(os.str().rfind("epsilon,ell,xi,re_lambda,im_lambda\n", 0) == 0);
    const std::string js = spectrum_summary_json({s});
    CHECK(js.find("predicted_C") != std::string::npos);
    CHECK(js.find("argmax_xi") != std::string::npos);
}

TEST_CASE("reduced quadratic model")
{
    const ReducedQuadratic q = reduced_quadratic(1.0, 0.1, 0.2, 0.01, 0.2);
    CHECK(q.B == 0.0);
    CHECK(q.roots[0].real() == doctest::Approx(q.C));
    CHECK(q.roots[0].imag() == doctest::Approx(q.A));
    CHECK(q.A == doctest::Approx(0.02993423974956024));
    // far from xi_ell the model is stable
    const ReducedQuadratic f = reduced_quadratic(1.0, 0.1, 0.25, 0.01, 0.2);
    CHECK(f.roots[0].real() == 0.0);
}

TEST_CASE("unstable xi window shrinks like eps^2")
{
    // half-width where B = C
    auto width = [](double eps) {
        const ReducedQuadratic q = reduced_quadratic(1.0, 0.1, 1.0, eps, 0.0);
        return q.C / std::fabs(q.B);
    };
    CHECK(width(0.02) / width(0.01) == doctest::Approx(4.0).epsilon(1e-12));
}
