#ifndef STOKES_COLLISION_HPP
#define STOKES_COLLISION_HPP

#include <stokes/dispersion.hpp>

#include <cmath>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace stokes
{

// A point (ell, xi_+(ell)) of the curve where lambda^-_1 and lambda^+_{-1}
// coincide, with the common eigenvalue i sigma_+.
struct CollisionPoint {
    double ell = 0.0;
    double xi_plus = 0.0;
    double sigma_plus = 0.0;
    double residual = 0.0;
};

class NewtonFailure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// phi(ell, xi) = 2 kappa - sqrt(mu0) (F(|(ell, kappa - xi)|) + F(|(ell, kappa + xi)|))
template <class T>
T phi(const T &ell, const T &xi, const T &kappa, const T &mu0)
{
    using std::sqrt;
    return T(2.0) * kappa - sqrt(mu0) * (F(omega(-1, ell, xi, kappa)) + F(omega(1, ell, xi, kappa)));
}

// d phi / d xi
template <class T>
T phi_xi(const T &ell, const T &xi, const T &kappa, const T &mu0)
{
    using std::sqrt;
    const T wm = omega(-1, ell, xi, kappa);
    const T w1 = omega(1, ell, xi, kappa);
    return -sqrt(mu0) * (F(wm, 1)[1] * (xi - kappa) / wm + F(w1, 1)[1] * (xi + kappa) / w1);
}

double phi(double ell, double xi, const WaveParams &params);
Interval phi(const Interval &ell, const Interval &xi, const WaveParams &params);

// Leading slope xi_+(ell) / ell at 0: sqrt(-F'(kappa) / (kappa F''(kappa))).
template <class T>
T xi_plus_slope(const T &kappa)
{
    using std::sqrt;
    const Jet<T> f = F(kappa, 2);
    return sqrt(-f[1] / (kappa * f[2]));
}

// Asymptotic expansion of xi_+ of order 1 or 3 in ell.
template <class T>
T xi_plus_expansion_t(const T &ell, const T &kappa, int order)
{
    const Jet<T> f = F(kappa, 4);
    const T s = xi_plus_slope(kappa);
    if (order == 1) {
        return ell * s;
    }
    if (order != 3) {
        throw std::invalid_argument("xi_plus_expansion: order must be 1 or 3");
    }
    const T r = f[1] / (kappa * f[2]);
    // Correction of delta = (omega_1 - omega_{-1})/2; xi_+ = delta (1 + ell^2/(2 kappa^2)) + O(ell^5).
    const T b = T(-0.25) - r + kappa / T(4.0) * (f[2] / f[1] - T(2.0) * f[3] / f[2])
                + kappa / T(12.0) * f[4] * f[1] / (f[2] * f[2]);
    const T l2 = ell * ell / (kappa * kappa);
    return ell * s * (T(1.0) + l2 / T(2.0) * (b + T(1.0)));
}

double xi_plus_expansion(double ell, const WaveParams &params, int order);

// xi_+(|ell|) is the smallest positive root of phi(|ell|, .): the branch
// leaving the double point (0, 0). It is bracketed by scanning (0, kappa)
// upward from 0, then refined by safeguarded Newton seeded by the order-1
// expansion, and extended to ell < 0 by oddness. Sets sigma_+.
template <class T>
T solve_xi_plus_t(const T &ell, const T &kappa, const T &mu0, T &sigma, T tol, int max_iter = 100)
{
    using std::abs;
    using std::sqrt;
    if (ell == T(0.0)) {
        sigma = T(0.0);
        return T(0.0);
    }
    const T l = abs(ell);
    constexpr int scan_steps = 512;
    const T step = kappa / T(static_cast<double>(scan_steps));
    T lo(0.0);
    T hi(0.0);
    bool bracketed = false;
    for (int i = 1; i <= scan_steps; ++i) {
        hi = step * T(static_cast<double>(i));
        if (phi(l, hi, kappa, mu0) > T(0.0)) {
            bracketed = true;
            break;
        }
        lo = hi;
    }
    if (!bracketed) {
        throw NewtonFailure("solve_xi_plus: no collision for this ell (beyond the fold of the curve)");
    }
    T x = l * xi_plus_slope(kappa);
    if (!(x > lo && x < hi)) {
        x = (lo + hi) / T(2.0);
    }
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        const T f = phi(l, x, kappa, mu0);
        if (f < T(0.0)) {
            lo = x;
        } else {
            hi = x;
        }
        if (abs(f) <= tol) {
            converged = true;
            break;
        }
        T next = x - f / phi_xi(l, x, kappa, mu0);
        if (!(next > lo && next < hi)) {
            next = (lo + hi) / T(2.0);
        }
        if (next == x) {
            converged = true;
            break;
        }
        x = next;
    }
    if (!converged) {
        throw NewtonFailure("solve_xi_plus: Newton did not converge");
    }
    const T xi = ell < T(0.0) ? T(-x) : x;
    // sigma_+ = Im lambda^-_1 at the collision.
    sigma = kappa + xi - sqrt(mu0) * F(omega(1, ell, xi, kappa));
    return xi;
}

// Default admissible |ell| range: 0.3 kappa.
double default_ell0(double kappa);

// Throws std::invalid_argument when |ell| > ell0 and NewtonFailure when the
// solver fails. ell = 0 returns the double point (0, 0, 0).
CollisionPoint solve_xi_plus(double ell, const WaveParams &params, double ell0 = -1.0);

// Validated enclosure of xi_+(ell) by interval Newton around the floating
// root; throws NewtonFailure if contraction (hence uniqueness) is not proved.
Interval xi_plus_enclosure(double ell, const WaveParams &params);

struct SeparationReport {
    bool separated = false;
    int n_check = 0;
    // Constant C0 used in the check and the measured margins.
    double c0 = 0.0;
    double min_distance_n0 = 0.0;     // over n = 0 modes, divided by |ell|
    double min_distance_other = 0.0;  // over |n| >= 1 modes other than the pair
    double colliding_distance = 0.0;  // |lambda^-_1 - lambda^+_{-1}|
};

// The other modes stay away from i sigma_+: at distance >= c0 |ell| for n = 0
// and >= c0 otherwise, |n| <= n_check.
SeparationReport verify_separation(double ell, const WaveParams &params, int n_check = 20, double c0 = 0.1);

// Samples ell = -ell_max .. ell_max (n points, ell = 0 included when n is odd).
std::vector<CollisionPoint> sample_curve_serial(const WaveParams &params, double ell_max, int n);
std::vector<CollisionPoint> sample_curve(const WaveParams &params, double ell_max, int n);

void write_curve_csv(std::ostream &os, const std::vector<CollisionPoint> &pts);

} // namespace stokes

#endif
