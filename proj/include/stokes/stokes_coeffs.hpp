#ifndef STOKES_STOKES_COEFFS_HPP
#define STOKES_STOKES_COEFFS_HPP

#include <stokes/interval.hpp>

#include <cmath>

namespace stokes
{

// Second-order Stokes expansion of the wave profile, velocity potential
// trace, Bernoulli parameter and the derived coefficients V, a. Each field
// is the scalar amplitude of one trigonometric mode:
//   eta   = eps eta1_amp cos(kx) + eps^2 (eta2_mean + eta2_2 cos(2kx))
//   psi   = eps psi1_amp sin(kx) + eps^2 psi2_2 sin(2kx)
//   mu    = mu0 + eps^2 mu2
//   V     = eps V1_amp cos(kx) + eps^2 (V2_mean + V2_2 cos(2kx))
//   a     = eps a1_amp cos(kx) + eps^2 (a2_mean + a2_2 cos(2kx))
template <class T>
struct BasicStokesCoefficients {
    T kappa;
    T eta1_amp, psi1_amp;
    T eta2_mean, eta2_2, psi2_2;
    T mu0, mu2;
    T V1_amp, V2_mean, V2_2;
    T a1_amp, a2_mean, a2_2;
};

// Fourier coefficients of index -2 with f_(m) = <e^{i kappa m x}, f>, so a
// term A cos(2 kappa x) contributes A / 2.
template <class T>
struct BasicSecondHarmonicCoeffs {
    T eta2_m2, eta1sq_m2, V2_m2, a2_m2;
};

using StokesCoefficients = BasicStokesCoefficients<double>;
using SecondHarmonicCoeffs = BasicSecondHarmonicCoeffs<double>;

namespace detail
{

// sinh, cosh, tanh of kappa computed once.
template <class T>
struct Hyperbolic {
    T S, C, T_;
    explicit Hyperbolic(const T &k)
    {
        using std::cosh;
        using std::sinh;
        S = sinh(k);
        C = cosh(k);
        T_ = S / C;
    }
};

} // namespace detail

template <class T>
BasicStokesCoefficients<T> stokes_coeffs_t(const T &k)
{
    const detail::Hyperbolic<T> h(k);
    const T &S = h.S;
    const T &C = h.C;
    const T &Th = h.T_;
    const T S2 = S * S;
    const T C2 = C * C;
    const T k2 = k * k;
    const T k3 = k2 * k;
    // cosh(2k) = 1 + 2 sinh^2 k
    const T ch2 = T(1.0) + T(2.0) * S2;

    BasicStokesCoefficients<T> c;
    c.kappa = k;
    c.eta1_amp = S;
    c.psi1_amp = C;
    c.eta2_mean = -k * Th / T(4.0);
    c.eta2_2 = k * (T(2.0) + ch2) / (T(4.0) * Th);
    c.psi2_2 = k * (ch2 + ch2 * ch2 + T(1.0)) / (T(4.0) * (ch2 - T(1.0)));
    c.mu0 = k / Th;
    c.mu2 = -k3 * (T(15.0) * S2 + T(16.0) * S2 * S2 + T(8.0) * S2 * S2 * S2 + T(9.0)) / (T(8.0) * C * S2 * S);
    c.V1_amp = k * C;
    c.V2_mean = k2 * S2 / T(2.0);
    c.V2_2 = k2 * (T(2.0) * S2 * S2 + T(6.0) * S2 + T(3.0)) / (T(4.0) * S2);
    c.a1_amp = -k2 * S;
    c.a2_mean = -k3 * (T(4.0) * C2 * C2 * C2 + T(3.0) * C2 + T(2.0)) / (T(8.0) * C * S2 * S);
    c.a2_2 = -k3 * (C2 + T(5.0)) / (T(2.0) * Th);
    return c;
}

template <class T>
BasicSecondHarmonicCoeffs<T> second_harmonics_t(const T &k)
{
    const detail::Hyperbolic<T> h(k);
    const T S2 = h.S * h.S;
    const T C2 = h.C * h.C;
    const T ch2 = T(1.0) + T(2.0) * S2;
    BasicSecondHarmonicCoeffs<T> c;
    c.eta2_m2 = k * (ch2 + T(2.0)) / (T(8.0) * h.T_);
    c.eta1sq_m2 = S2 / T(4.0);
    c.V2_m2 = k * k * (T(2.0) * S2 * S2 + T(6.0) * S2 + T(3.0)) / (T(8.0) * S2);
    c.a2_m2 = -k * k * k * (C2 + T(5.0)) / (T(4.0) * h.T_);
    return c;
}

// Throw std::domain_error unless kappa > 0.
StokesCoefficients stokes_coeffs(double kappa);
BasicStokesCoefficients<Interval> stokes_coeffs(const Interval &kappa);
SecondHarmonicCoeffs second_harmonics(double kappa);
BasicSecondHarmonicCoeffs<Interval> second_harmonics(const Interval &kappa);

} // namespace stokes

#endif
