#include <stokes/stokes_coeffs.hpp>

#include <stdexcept>

namespace stokes
{

namespace
{

void require_positive(double kappa)
{
    if (!(kappa > 0.0)) {
        throw std::domain_error("kappa must be positive");
    }
}

void require_positive(const Interval &kappa)
{
    if (!kappa.is_positive()) {
        throw std::domain_error("kappa must be positive");
    }
}

} // namespace

StokesCoefficients stokes_coeffs(double kappa)
{
    require_positive(kappa);
    return stokes_coeffs_t(kappa);
}

BasicStokesCoefficients<Interval> stokes_coeffs(const Interval &kappa)
{
    require_positive(kappa);
    return stokes_coeffs_t(kappa);
}

SecondHarmonicCoeffs second_harmonics(double kappa)
{
    require_positive(kappa);
    return second_harmonics_t(kappa);
}

BasicSecondHarmonicCoeffs<Interval> second_harmonics(const Interval &kappa)
{
    require_positive(kappa);
    return second_harmonics_t(kappa);
}

} // namespace stokes
