#ifndef STOKES_DISPERSION_HPP
#define STOKES_DISPERSION_HPP

#include <stokes/interval.hpp>
#include <stokes/jet.hpp>

#include <array>
#include <cmath>
#include <complex>

namespace stokes
{

enum class Branch { minus = -1, plus = 1 };

inline int sign_of(Branch b) noexcept
{
    return b == Branch::plus ? 1 : -1;
}

// Wavenumber and zero-amplitude inverse Froude number mu0 = kappa / tanh(kappa).
struct WaveParams {
    Interval kappa;
    Interval mu0;

    // Throws std::domain_error unless kappa > 0.
    static WaveParams from_kappa(const Interval &kappa);

    [[nodiscard]] double kappa_f() const noexcept { return kappa.mid(); }
    [[nodiscard]] double mu0_f() const noexcept { return mu0.mid(); }
};

struct ModeEigenvalue {
    int n = 0;
    Branch branch = Branch::plus;
    std::complex<double> value;
};

// Below this radius F is evaluated from the odd power series of
// r sqrt(tanh(r)/r) instead of the square-root composition.
inline constexpr double F_series_threshold = 1e-2;

namespace detail
{

// sqrt(tanh(r)/r) = sum_k c_k r^(2k); c_k = num/den exactly.
inline constexpr int F_series_terms = 9;
inline constexpr std::array<double, F_series_terms> F_series_num{
    1.0, -1.0, 19.0, -55.0, 11813.0, -2117.0, 64604977.0, -263101079.0, 1768132943.0};
inline constexpr std::array<double, F_series_terms> F_series_den{
    1.0, 6.0, 360.0, 3024.0, 1814400.0, 887040.0, 72648576000.0, 784604620800.0, 13857951744000.0};

template <class T>
T square(const T &x)
{
    return x * x;
}

inline Interval square(const Interval &x)
{
    return sqr(x);
}

// r * sum_k c_k r^(2k) for scalars or jets.
template <class S, class T>
S F_series_poly(const S &r)
{
    const S r2 = r * r;
    S p = r2 * T(0.0) + T(F_series_num[F_series_terms - 1]) / T(F_series_den[F_series_terms - 1]);
    for (int k = F_series_terms - 2; k >= 0; --k) {
        p = p * r2 + T(F_series_num[k]) / T(F_series_den[k]);
    }
    return p * r;
}

} // namespace detail

// Rigorous enclosures. F(r, order) requires r.lo() > 0; F_odd accepts any r
// and uses the odd extension, with the Taylor-at-zero path for |r| < 1e-2.
Jet<Interval> F(const Interval &r, int order);
Jet<Interval> F_odd(const Interval &r, int order);
Interval F(const Interval &r);

// Floating versions for real scalar types (double, long double,
// multiprecision). F is odd; F(0) = 0.
template <class T>
T F(const T &r)
{
    using std::abs;
    using std::sqrt;
    using std::tanh;
    if (abs(r) < T(F_series_threshold)) {
        return detail::F_series_poly<T, T>(r);
    }
    const T a = abs(r);
    const T v = sqrt(a * tanh(a));
    return r < T(0.0) ? T(-v) : v;
}

template <class T>
Jet<T> F(const T &r, int order)
{
    using std::abs;
    Jet<T> x = Jet<T>::variable(abs(r), order);
    Jet<T> j = abs(r) < T(F_series_threshold) ? detail::F_series_poly<Jet<T>, T>(x) : sqrt(x * tanh(x));
    if (r < T(0.0)) {
        // F^(k)(-a) = (-1)^(k+1) F^(k)(a)
        for (int k = 0; k <= order; k += 2) {
            j[k] = -j[k];
        }
    }
    return j;
}

// omega_j = |j kappa|_{ell,xi} = sqrt((j kappa + xi)^2 + ell^2)
template <class T>
T omega(int j, const T &ell, const T &xi, const T &kappa)
{
    using std::sqrt;
    return sqrt(detail::square(T(static_cast<double>(j)) * kappa + xi) + detail::square(ell));
}

// Imaginary part of lambda^{+-}_{n,ell,xi} = i (n kappa + xi +- sqrt(mu0) F(omega_n)).
template <class T>
T lambda_im(int n, Branch b, const T &ell, const T &xi, const T &kappa, const T &mu0)
{
    using std::sqrt;
    const T f = sqrt(mu0) * F(omega(n, ell, xi, kappa));
    const T base = T(static_cast<double>(n)) * kappa + xi;
    return b == Branch::plus ? base + f : base - f;
}

ModeEigenvalue lambda(int n, Branch b, double ell, double xi, const WaveParams &params);
Interval lambda_im(int n, Branch b, const Interval &ell, const Interval &xi, const WaveParams &params);

// alpha_+ = F(omega_{-1}) F(kappa) / kappa, alpha_- = F(omega_1) F(kappa) / kappa.
template <class T>
T alpha_pm(Branch b, const T &ell, const T &xi, const T &kappa)
{
    const int j = b == Branch::plus ? -1 : 1;
    return F(omega(j, ell, xi, kappa)) * F(kappa) / kappa;
}

double alpha_pm(Branch b, double ell, double xi, const WaveParams &params);
Interval alpha_pm(Branch b, const Interval &ell, const Interval &xi, const WaveParams &params);

} // namespace stokes

#endif
