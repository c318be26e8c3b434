#include <stokes/spectrum.hpp>

#include <stokes/collision.hpp>
#include <stokes/dispersion.hpp>
#include <stokes/index.hpp>
#include <stokes/io.hpp>
#include <stokes/parallel.hpp>
#include <stokes/stokes_coeffs.hpp>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace stokes
{

Eigen::MatrixXcd multiplication_matrix(int M, const std::array<double, 5> &coef)
{
    const int n = 2 * M + 1;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int d = -2; d <= 2; ++d) {
            const int j = i - d;
            if (j >= 0 && j < n) {
                A(i, j) = coef[static_cast<std::size_t>(d + 2)];
            }
        }
    }
    return A;
}

BlochMatrix assemble(int N, double kappa, double ell, double xi, double epsilon)
{
    if (N < 8) {
        throw std::invalid_argument("assemble: N must be at least 8");
    }
    if (!(std::fabs(epsilon) <= 0.1)) {
        throw std::invalid_argument("assemble: |epsilon| must not exceed 0.1");
    }
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("assemble: kappa must be positive");
    }
    // Products are formed at M = N + 4 and cropped afterwards.
    const int M = N + 4;
    const int n = 2 * M + 1;
    const StokesCoefficients sc = stokes_coeffs_t(kappa);
    const double S = std::sinh(kappa);
    const double eps2 = epsilon * epsilon;

    const Eigen::MatrixXcd E1 = multiplication_matrix(M, {0.0, sc.eta1_amp / 2, 0.0, sc.eta1_amp / 2, 0.0});
    const Eigen::MatrixXcd E2 =
        multiplication_matrix(M, {sc.eta2_2 / 2, 0.0, sc.eta2_mean, 0.0, sc.eta2_2 / 2});
    const Eigen::MatrixXcd E1sq = multiplication_matrix(M, {S * S / 4, 0.0, S * S / 2, 0.0, S * S / 4});
    const Eigen::MatrixXcd V = epsilon * multiplication_matrix(M, {0.0, sc.V1_amp / 2, 0.0, sc.V1_amp / 2, 0.0})
                               + eps2 * multiplication_matrix(M, {sc.V2_2 / 2, 0.0, sc.V2_mean, 0.0, sc.V2_2 / 2});
    const Eigen::MatrixXcd a = epsilon * multiplication_matrix(M, {0.0, sc.a1_amp / 2, 0.0, sc.a1_amp / 2, 0.0})
                               + eps2 * multiplication_matrix(M, {sc.a2_2 / 2, 0.0, sc.a2_mean, 0.0, sc.a2_2 / 2});

    Eigen::VectorXd g(n);
    Eigen::VectorXd d2(n);
    Eigen::VectorXcd dx(n);
    for (int i = 0; i < n; ++i) {
        const double k = (i - M) * kappa + xi;
        const double w = std::hypot(k, ell);
        g(i) = w * std::tanh(w);
        d2(i) = w * w;
        dx(i) = std::complex<double>(0.0, k);
    }
    const auto G = g.asDiagonal();
    const auto D2 = d2.asDiagonal();
    const auto Dx = dx.asDiagonal();

    auto gt1 = [&](const Eigen::MatrixXcd &E) -> Eigen::MatrixXcd {
        return -(G * E * G) - Dx * E * Dx + ell * ell * E;
    };
    const Eigen::MatrixXcd gt2 = G * E1 * G * E1 * G - 0.5 * (D2 * E1sq * G) - 0.5 * (G * E1sq * D2);
    Eigen::MatrixXcd Gfull = epsilon * gt1(E1) + eps2 * (gt1(E2) + gt2);
    Gfull.diagonal() += g.cast<std::complex<double>>();

    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd TL = Dx * (I - V);
    const Eigen::MatrixXcd BR = (I - V) * Dx;
    const Eigen::MatrixXcd BL = -(sc.mu0 * I + a);

    const int m = 2 * N + 1;
    BlochMatrix out;
    out.N = N;
    out.dim = 2 * m;
    out.kappa = kappa;
    out.mu_eps = sc.mu0 + eps2 * sc.mu2;
    out.ell = ell;
    out.xi = xi;
    out.epsilon = epsilon;
    out.entries.resize(out.dim, out.dim);
    out.entries.topLeftCorner(m, m) = TL.block(4, 4, m, m);
    out.entries.topRightCorner(m, m) = Gfull.block(4, 4, m, m);
    out.entries.bottomLeftCorner(m, m) = BL.block(4, 4, m, m);
    out.entries.bottomRightCorner(m, m) = BR.block(4, 4, m, m);
    return out;
}

namespace
{

void sort_spectrum(std::vector<std::complex<double>> &v)
{
    std::sort(v.begin(), v.end(), [](const auto &x, const auto &y) {
        return x.imag() < y.imag() || (x.imag() == y.imag() && x.real() < y.real());
    });
}

} // namespace

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXcd &m)
{
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalues: QR iteration did not converge");
    }
    const Eigen::VectorXcd &v = es.eigenvalues();
    std::vector<std::complex<double>> out(v.data(), v.data() + v.size());
    sort_spectrum(out);
    return out;
}

std::vector<std::complex<double>> eigenvalues(const BlochMatrix &m)
{
    // Diagonal blocks are purely imaginary and off-diagonal blocks real, so
    // diag(I, iI) maps the symbol to i [[A, B], [-C, D]] with A..D real.
    const int h = m.dim / 2;
    const Eigen::MatrixXcd &L = m.entries;
    const bool structured = L.topLeftCorner(h, h).real().isZero(0.0) && L.bottomRightCorner(h, h).real().isZero(0.0)
                            && L.topRightCorner(h, h).imag().isZero(0.0)
                            && L.bottomLeftCorner(h, h).imag().isZero(0.0);
    if (!structured) {
        return eigenvalues(L);
    }
    Eigen::MatrixXd R(m.dim, m.dim);
    R.topLeftCorner(h, h) = L.topLeftCorner(h, h).imag();
    R.topRightCorner(h, h) = L.topRightCorner(h, h).real();
    R.bottomLeftCorner(h, h) = -L.bottomLeftCorner(h, h).real();
    R.bottomRightCorner(h, h) = L.bottomRightCorner(h, h).imag();
    Eigen::EigenSolver<Eigen::MatrixXd> es(R, false);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalues: QR iteration did not converge");
    }
    const std::complex<double> i(0.0, 1.0);
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(m.dim));
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        out.push_back(i * es.eigenvalues()(k));
    }
    sort_spectrum(out);
    return out;
}

SpectrumSample spectrum_sample(double kappa, double ell, double xi, double epsilon, double sigma_plus,
                               const ScanOptions &opt)
{
    SpectrumSample s;
    s.epsilon = epsilon;
    s.ell = ell;
    s.xi = xi;
    const std::complex<double> centre(0.0, sigma_plus);
    const double radius = opt.window * std::fabs(ell);
    for (const auto &l : eigenvalues(assemble(opt.N, kappa, ell, xi, epsilon))) {
        if (std::abs(l - centre) < radius) {
            s.eigenvalues.push_back(l);
            s.max_growth = std::max(s.max_growth, l.real());
        }
    }
    return s;
}

namespace
{

GrowthScan scan_setup(double kappa, double ell, double epsilon, const ScanOptions &opt)
{
    if (opt.n_xi < 2) {
        throw std::invalid_argument("growth_scan: n_xi must be at least 2");
    }
    const WaveParams params = WaveParams::from_kappa(Interval(kappa));
    const CollisionPoint p = solve_xi_plus(ell, params);
    GrowthScan g;
    g.kappa = kappa;
    g.N = opt.N;
    g.xi_plus = p.xi_plus;
    g.sigma_plus = p.sigma_plus;
    g.gamma = gamma_closed_form(kappa, ell).gamma;
    g.alpha_minus = alpha_pm(Branch::minus, ell, p.xi_plus, params);
    g.alpha_plus = alpha_pm(Branch::plus, ell, p.xi_plus, params);
    g.predicted_C = epsilon * epsilon * std::fabs(g.gamma) / (2.0 * std::sqrt(g.alpha_minus * g.alpha_plus));
    g.grid.resize(static_cast<std::size_t>(opt.n_xi));
    return g;
}

double grid_xi(const GrowthScan &g, double ell, const ScanOptions &opt, int i)
{
    const double h = opt.window * std::fabs(ell);
    return g.xi_plus - h + 2.0 * h * i / (opt.n_xi - 1);
}

void finish(GrowthScan &g, double kappa, double ell, double epsilon, const ScanOptions &opt)
{
    // First index wins ties, so the result does not depend on scheduling.
    std::size_t best = 0;
    for (std::size_t i = 1; i < g.grid.size(); ++i) {
        if (g.grid[i].max_growth > g.grid[best].max_growth) {
            best = i;
        }
    }
    g.best = g.grid[best];
    if (opt.refine_steps <= 0 || g.best.max_growth <= 0.0) {
        return;
    }
    const int bi = static_cast<int>(best);
    double a = grid_xi(g, ell, opt, std::max(bi - 1, 0));
    double b = grid_xi(g, ell, opt, std::min(bi + 1, opt.n_xi - 1));
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - r * (b - a);
    double x2 = a + r * (b - a);
    SpectrumSample s1 = spectrum_sample(kappa, ell, x1, epsilon, g.sigma_plus, opt);
    SpectrumSample s2 = spectrum_sample(kappa, ell, x2, epsilon, g.sigma_plus, opt);
    for (int it = 0; it < opt.refine_steps; ++it) {
        if (s1.max_growth >= s2.max_growth) {
            b = x2;
            x2 = x1;
            s2 = std::move(s1);
            x1 = b - r * (b - a);
            s1 = spectrum_sample(kappa, ell, x1, epsilon, g.sigma_plus, opt);
        } else {
            a = x1;
            x1 = x2;
            s1 = std::move(s2);
            x2 = a + r * (b - a);
            s2 = spectrum_sample(kappa, ell, x2, epsilon, g.sigma_plus, opt);
        }
    }
    for (SpectrumSample *s : {&s1, &s2}) {
        if (s->max_growth > g.best.max_growth) {
            g.best = *s;
        }
    }
}

} // namespace

GrowthScan growth_scan_serial(double kappa, double ell, double epsilon, const ScanOptions &opt)
{
    GrowthScan g = scan_setup(kappa, ell, epsilon, opt);
    for (int i = 0; i < opt.n_xi; ++i) {
        g.grid[static_cast<std::size_t>(i)] =
            spectrum_sample(kappa, ell, grid_xi(g, ell, opt, i), epsilon, g.sigma_plus, opt);
    }
    finish(g, kappa, ell, epsilon, opt);
    return g;
}

GrowthScan growth_scan(double kappa, double ell, double epsilon, const ScanOptions &opt)
{
    GrowthScan g = scan_setup(kappa, ell, epsilon, opt);
    bool failed = false;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int i = 0; i < opt.n_xi; ++i) {
        try {
            g.grid[static_cast<std::size_t>(i)] =
                spectrum_sample(kappa, ell, grid_xi(g, ell, opt, i), epsilon, g.sigma_plus, opt);
        } catch (...) {
#pragma omp atomic write
            failed = true;
        }
    }
    if (failed) {
        return growth_scan_serial(kappa, ell, epsilon, opt);
    }
    finish(g, kappa, ell, epsilon, opt);
    return g;
}

ReducedQuadratic reduced_quadratic(double kappa, double ell, double xi, double epsilon, double xi_ell)
{
    const WaveParams params = WaveParams::from_kappa(Interval(kappa));
    const CollisionPoint p = solve_xi_plus(ell, params);
    const double mu0 = params.mu0_f();
    // d_xi^2 phi(0, 0) = -2 sqrt(mu0) F''(kappa)
    const double phi_xixi = -2.0 * std::sqrt(mu0) * F(kappa, 2)[2];
    const double gamma = gamma_closed_form(kappa, ell).gamma;
    const double am = alpha_pm(Branch::minus, ell, p.xi_plus, params);
    const double ap = alpha_pm(Branch::plus, ell, p.xi_plus, params);
    ReducedQuadratic q;
    q.A = p.sigma_plus;
    q.B = -0.5 * phi_xixi * p.xi_plus * (xi - xi_ell);
    q.C = epsilon * epsilon * std::fabs(gamma) / (2.0 * std::sqrt(am * ap));
    const std::complex<double> root = std::sqrt(std::complex<double>(q.B * q.B - q.C * q.C, 0.0));
    const std::complex<double> i(0.0, 1.0);
    q.roots[0] = i * (q.A - root);
    q.roots[1] = i * (q.A + root);
    if (q.roots[0].real() < q.roots[1].real()) {
        std::swap(q.roots[0], q.roots[1]);
    }
    return q;
}

void write_spectrum_csv(std::ostream &os, const std::vector<GrowthScan> &scans)
{
    os << "epsilon,ell,xi,re_lambda,im_lambda\n";
    for (const auto &g : scans) {
        for (const auto &s : g.grid) {
            for (const auto &l : s.eigenvalues) {
                os << shortest(s.epsilon) << ',' << shortest(s.ell) << ',' << shortest(s.xi) << ','
                   << shortest(l.real()) << ',' << shortest(l.imag()) << '\n';
            }
        }
    }
}

std::string spectrum_summary_json(const std::vector<GrowthScan> &scans)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &g : scans) {
        nlohmann::ordered_json j;
        j["kappa"] = g.kappa;
        j["ell"] = g.best.ell;
        j["epsilon"] = g.best.epsilon;
        j["N"] = g.N;
        j["xi_plus"] = g.xi_plus;
        j["sigma_plus"] = g.sigma_plus;
        j["gamma"] = g.gamma;
        j["max_growth"] = g.best.max_growth;
        j["argmax_xi"] = g.best.xi;
        j["predicted_C"] = g.predicted_C;
        j["ratio"] = g.predicted_C > 0.0 ? g.best.max_growth / g.predicted_C : 0.0;
        out.push_back(j);
    }
    return out.dump(2) + "\n";
}

} // namespace stokes
