#include <stokes/collision.hpp>

#include <stokes/io.hpp>
#include <stokes/parallel.hpp>

#include <algorithm>
#include <limits>
#include <ostream>

namespace stokes
{

double phi(double ell, double xi, const WaveParams &params)
{
    return phi<double>(ell, xi, params.kappa_f(), params.mu0_f());
}

Interval phi(const Interval &ell, const Interval &xi, const WaveParams &params)
{
    return phi<Interval>(ell, xi, params.kappa, params.mu0);
}

double xi_plus_expansion(double ell, const WaveParams &params, int order)
{
    return xi_plus_expansion_t(ell, params.kappa_f(), order);
}

double default_ell0(double kappa)
{
    return 0.3 * kappa;
}

CollisionPoint solve_xi_plus(double ell, const WaveParams &params, double ell0)
{
    const double kappa = params.kappa_f();
    const double mu0 = params.mu0_f();
    if (ell0 < 0) {
        ell0 = default_ell0(kappa);
    }
    if (std::fabs(ell) > ell0) {
        throw std::invalid_argument("solve_xi_plus: |ell| exceeds ell0");
    }
    CollisionPoint p;
    p.ell = ell;
    p.xi_plus = solve_xi_plus_t(ell, kappa, mu0, p.sigma_plus, 1e-14);
    p.residual = std::fabs(phi<double>(ell, p.xi_plus, kappa, mu0));
    return p;
}

Interval xi_plus_enclosure(double ell, const WaveParams &params)
{
    const CollisionPoint p = solve_xi_plus(std::fabs(ell), params);
    const Interval l(std::fabs(ell));
    const double m = p.xi_plus;
    const Interval fm = phi(l, Interval(m), params);
    double r = std::max(1e-13, 1e-10 * std::fabs(m));
    for (int attempt = 0; attempt < 8; ++attempt, r *= 16.0) {
        const Interval box(m - r, m + r);
        if (!box.is_positive()) {
            break;
        }
        const Interval d = phi_xi<Interval>(l, box, params.kappa, params.mu0);
        if (d.contains_zero()) {
            continue;
        }
        const Interval n = Interval(m) - fm / d;
        if (box.interior_contains(n)) {
            return ell < 0 ? -n : n;
        }
    }
    throw NewtonFailure("xi_plus_enclosure: interval Newton did not contract");
}

SeparationReport verify_separation(double ell, const WaveParams &params, int n_check, double c0)
{
    const CollisionPoint p = solve_xi_plus(ell, params);
    const double kappa = params.kappa_f();
    const double mu0 = params.mu0_f();
    SeparationReport rep;
    rep.n_check = n_check;
    rep.c0 = c0;
    rep.min_distance_n0 = std::numeric_limits<double>::infinity();
    rep.min_distance_other = std::numeric_limits<double>::infinity();
    const double a = lambda_im(1, Branch::minus, ell, p.xi_plus, kappa, mu0);
    const double b = lambda_im(-1, Branch::plus, ell, p.xi_plus, kappa, mu0);
    rep.colliding_distance = std::fabs(a - b);
    for (int n = -n_check; n <= n_check; ++n) {
        for (Branch br : {Branch::minus, Branch::plus}) {
            if ((n == 1 && br == Branch::minus) || (n == -1 && br == Branch::plus)) {
                continue;
            }
            const double d = std::fabs(lambda_im(n, br, ell, p.xi_plus, kappa, mu0) - p.sigma_plus);
            if (n == 0) {
                rep.min_distance_n0 = std::min(rep.min_distance_n0, d / std::fabs(ell));
            } else {
                rep.min_distance_other = std::min(rep.min_distance_other, d);
            }
        }
    }
    rep.separated = ell != 0.0 && rep.min_distance_n0 >= c0 && rep.min_distance_other >= c0;
    return rep;
}

namespace
{

double sample_ell(double ell_max, int n, int i)
{
    if (n == 1) {
        return 0.0;
    }
    if (2 * i == n - 1) {
        return 0.0;
    }
    return -ell_max + 2.0 * ell_max * static_cast<double>(i) / static_cast<double>(n - 1);
}

void check_samples(double ell_max, int n)
{
    if (n < 1 || !(ell_max > 0)) {
        throw std::invalid_argument("sample_curve: need n >= 1 and ell_max > 0");
    }
}

} // namespace

std::vector<CollisionPoint> sample_curve_serial(const WaveParams &params, double ell_max, int n)
{
    check_samples(ell_max, n);
    std::vector<CollisionPoint> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = solve_xi_plus(sample_ell(ell_max, n, i), params, ell_max);
    }
    return out;
}

std::vector<CollisionPoint> sample_curve(const WaveParams &params, double ell_max, int n)
{
    check_samples(ell_max, n);
    std::vector<CollisionPoint> out(static_cast<std::size_t>(n));
    bool failed = false;
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (int i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = solve_xi_plus(sample_ell(ell_max, n, i), params, ell_max);
        } catch (...) {
#pragma omp atomic write
            failed = true;
        }
    }
    if (failed) {
        // Rerun serially to surface the exception.
        return sample_curve_serial(params, ell_max, n);
    }
    return out;
}

void write_curve_csv(std::ostream &os, const std::vector<CollisionPoint> &pts)
{
    os << "ell,xi_plus,sigma_plus,residual\n";
    for (const auto &p : pts) {
        os << shortest(p.ell) << ',' << shortest(p.xi_plus) << ',' << shortest(p.sigma_plus) << ','
           << shortest(p.residual) << '\n';
    }
}

} // namespace stokes
