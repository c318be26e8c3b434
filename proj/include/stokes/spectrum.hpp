#ifndef STOKES_SPECTRUM_HPP
#define STOKES_SPECTRUM_HPP

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace stokes
{

// Fourier-Galerkin truncation of the Bloch symbol L^eps_{ell,xi} on modes
// |n| <= N. Unknowns are ordered (eta_{-N..N}, psi_{-N..N}).
struct BlochMatrix {
    int N = 0;
    int dim = 0;
    Eigen::MatrixXcd entries;
    double kappa = 0.0;
    double mu_eps = 0.0;  // mu0 + eps^2 mu2, metadata only
    double ell = 0.0;
    double xi = 0.0;
    double epsilon = 0.0;
};

// Throws std::invalid_argument unless N >= 8, |eps| <= 0.1 and kappa > 0.
BlochMatrix assemble(int N, double kappa, double ell, double xi, double epsilon);

// Band matrix of multiplication by sum_m coef[m] e^{i m kappa x} on modes |n| <= M;
// coef is indexed from -2 to 2.
Eigen::MatrixXcd multiplication_matrix(int M, const std::array<double, 5> &coef);

// All eigenvalues; throws std::runtime_error if the QR iteration fails.
std::vector<std::complex<double>> eigenvalues(const BlochMatrix &m);
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXcd &m);

struct SpectrumSample {
    double epsilon = 0.0;
    double ell = 0.0;
    double xi = 0.0;
    std::vector<std::complex<double>> eigenvalues;  // those inside the window
    double max_growth = 0.0;
};

struct ScanOptions {
    int N = 24;
    double window = 0.3;  // c in B(i sigma_+, c |ell|) and xi_+ +- c |ell|
    int n_xi = 201;
    // Golden-section steps around the best grid point; 0 keeps the raw grid maximum.
    int refine_steps = 40;
};

struct GrowthScan {
    double kappa = 0.0;
    int N = 0;
    double xi_plus = 0.0;
    double sigma_plus = 0.0;
    double gamma = 0.0;  // Gamma(kappa, ell)
    double alpha_minus = 0.0;
    double alpha_plus = 0.0;
    double predicted_C = 0.0;  // eps^2 |Gamma| / (2 sqrt(alpha_- alpha_+))
    std::vector<SpectrumSample> grid;
    SpectrumSample best;
};

// Windowed sample at one xi.
SpectrumSample spectrum_sample(double kappa, double ell, double xi, double epsilon, double sigma_plus,
                               const ScanOptions &opt = {});

// Grid over xi_+ +- c|ell|, parallel over grid points with a reduction by
// grid index, then a serial golden-section refinement of the maximum.
GrowthScan growth_scan_serial(double kappa, double ell, double epsilon, const ScanOptions &opt = {});
GrowthScan growth_scan(double kappa, double ell, double epsilon, const ScanOptions &opt = {});

struct ReducedQuadratic {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    std::complex<double> roots[2];  // larger real part first
};

// Leading-order model (lambda/i - A)^2 = B^2 - C^2 with A = sigma_+,
// B = -1/2 d_xi^2 phi(0,0) xi_+ (xi - xi_ell), C = eps^2 |Gamma| / (2 sqrt(alpha_- alpha_+)).
ReducedQuadratic reduced_quadratic(double kappa, double ell, double xi, double epsilon, double xi_ell);

// Rows epsilon, ell, xi, re_lambda, im_lambda for every windowed eigenvalue.
void write_spectrum_csv(std::ostream &os, const std::vector<GrowthScan> &scans);
// max_growth, argmax_xi, predicted_C and context per scan.
std::string spectrum_summary_json(const std::vector<GrowthScan> &scans);

} // namespace stokes

#endif
