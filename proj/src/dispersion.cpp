#include <stokes/dispersion.hpp>

#include <algorithm>
#include <stdexcept>

namespace stokes
{

namespace
{

// Bound on |sqrt(tanh z / z)| over |z| = 1: there |tanh z| <= tan 1 < 1.56,
// so the modulus stays below 1.25; we use 2. Cauchy's estimate then gives
// |c_k| <= 2 for every series coefficient.
constexpr double cauchy_bound = 2.0;

// Bound on |d^j/dr^j sum_{k>=9} c_k r^(2k+1)| for |r| <= rho < 1/2.
Interval series_tail(double rho, int j)
{
    const Interval p(rho);
    const int first = 2 * detail::F_series_terms + 1;
    Interval falling(1.0);
    for (int i = 0; i < j; ++i) {
        falling = falling * Interval(static_cast<double>(first - i));
    }
    const Interval lead = Interval(cauchy_bound) * falling * pown(p, first - j);
    // Successive term ratios decrease in k and start below q.
    const Interval q = Interval(static_cast<double>((first + 2) * (first + 1)))
                       / Interval(static_cast<double>((first + 2 - j) * (first + 1 - j))) * sqr(p);
    const double bound = (lead / (Interval(1.0) - q)).hi();
    return {-bound, bound};
}

Jet<Interval> F_series_jet(const Interval &r, int order)
{
    const Jet<Interval> x = jet_var(r, order);
    Jet<Interval> j = detail::F_series_poly<Jet<Interval>, Interval>(x);
    const double rho = r.mag();
    for (int k = 0; k <= order; ++k) {
        j[k] = j[k] + series_tail(rho, k);
    }
    return j;
}

Jet<Interval> F_positive(const Interval &r, int order)
{
    if (r.hi() < F_series_threshold) {
        return F_series_jet(r, order);
    }
    const Jet<Interval> x = jet_var(r, order);
    return sqrt(x * tanh(x));
}

// F at a single double, enclosed.
Interval F_point(double x)
{
    if (x == 0.0) {
        return Interval(0.0);
    }
    const Interval v = F_positive(Interval(std::fabs(x)), 0)[0];
    return x < 0 ? -v : v;
}

} // namespace

WaveParams WaveParams::from_kappa(const Interval &kappa)
{
    if (!kappa.is_positive()) {
        throw std::domain_error("WaveParams: kappa must be positive");
    }
    return {kappa, kappa / tanh(kappa)};
}

Jet<Interval> F(const Interval &r, int order)
{
    Jet<Interval>::check_order(order);
    if (!r.is_positive()) {
        throw std::domain_error("F: argument must be bounded away from 0; use F_odd");
    }
    return F_positive(r, order);
}

Jet<Interval> F_odd(const Interval &r, int order)
{
    Jet<Interval>::check_order(order);
    if (r.is_positive()) {
        return F_positive(r, order);
    }
    if (r.is_negative()) {
        Jet<Interval> j = F_positive(-r, order);
        for (int k = 0; k <= order; k += 2) {
            j[k] = -j[k];
        }
        return j;
    }
    if (r.mag() < F_series_threshold) {
        return F_series_jet(r, order);
    }
    if (order == 0) {
        return Jet<Interval>(F(r), 0);
    }
    throw std::domain_error("F_odd: interval straddles 0 beyond the series radius");
}

Interval F(const Interval &r)
{
    // F is increasing on the real line.
    return {F_point(r.lo()).lo(), F_point(r.hi()).hi()};
}

ModeEigenvalue lambda(int n, Branch b, double ell, double xi, const WaveParams &params)
{
    const double im = lambda_im(n, b, ell, xi, params.kappa_f(), params.mu0_f());
    return {n, b, {0.0, im}};
}

Interval lambda_im(int n, Branch b, const Interval &ell, const Interval &xi, const WaveParams &params)
{
    return lambda_im<Interval>(n, b, ell, xi, params.kappa, params.mu0);
}

double alpha_pm(Branch b, double ell, double xi, const WaveParams &params)
{
    return alpha_pm<double>(b, ell, xi, params.kappa_f());
}

Interval alpha_pm(Branch b, const Interval &ell, const Interval &xi, const WaveParams &params)
{
    return alpha_pm<Interval>(b, ell, xi, params.kappa);
}

} // namespace stokes
