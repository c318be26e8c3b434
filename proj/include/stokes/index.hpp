#ifndef STOKES_INDEX_HPP
#define STOKES_INDEX_HPP

#include <stokes/collision.hpp>
#include <stokes/dispersion.hpp>
#include <stokes/stokes_coeffs.hpp>

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <vector>

namespace stokes
{

enum class Route { closed_form, matrix, taylor };

const char *to_string(Route r);

struct IndexValue {
    double gamma_I = 0.0;
    double gamma_II = 0.0;
    double gamma = 0.0;
    Route route = Route::closed_form;
    double ell = 0.0;
    double kappa = 0.0;
};

struct IndexEnclosure {
    Interval gamma_I;
    Interval gamma_II;
    Interval gamma;
};

template <class T>
struct GammaParts {
    T gamma_I;
    T gamma_II;
};

class EvaluationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Gamma_I(ell), Gamma_II(ell) from the explicit formulas in terms of F at
// omega_j = |(ell, j kappa + xi)| with xi = xi_+(ell) supplied by the caller.
template <class T>
GammaParts<T> gamma_closed_form_at(const T &k, const T &ell, const T &xi)
{
    using std::cosh;
    using std::sinh;
    const auto h = second_harmonics_t(k);
    const T S = sinh(k);
    const T C = cosh(k);
    const T Th = S / C;
    const T Fk = F(k);
    const T F1 = F(omega(1, ell, xi, k));
    const T Fm = F(omega(-1, ell, xi, k));
    const T F0 = F(omega(0, ell, xi, k));
    const T F1s = F1 * F1;
    const T Fms = Fm * Fm;
    const T F0s = F0 * F0;
    const T l2x2 = ell * ell + xi * xi;

    GammaParts<T> g;
    g.gamma_I = h.V2_m2 * Fk / k * (k * (F1 + Fm) - xi * (F1 - Fm)) + h.a2_m2 * Th / k * F1 * Fm
                + h.eta2_m2 * (k * k + F1s * Fms - l2x2)
                + h.eta1sq_m2
                      * (T(0.5) * (k * k + l2x2) * (F1s + Fms) - k * xi * (F1s - Fms) - F0s * F1s * Fms);

    const T X1 = xi * C * Fk * F1 + S * (k * xi + l2x2 - F0s * F1s);
    const T X2 = xi * C * Fk * Fm + S * (k * xi - l2x2 + F0s * Fms);
    const T Y1 = -(k + xi) * k * C + k * S * Fk * F1;
    const T Y2 = -(k - xi) * k * C + k * S * Fk * Fm;
    const T num = -X1 * X2 - Th / k * F0s * Y1 * Y2 + Fk / (T(2.0) * k) * (F1 - Fm) * (Y2 * X1 + Y1 * X2);
    const T dF = F1 - Fm;
    const T den = T(4.0) * F0s - dF * dF;
    g.gamma_II = num / den;
    return g;
}

// Closed form at xi_+(ell) solved in the scalar type T (no small-ell guard).
template <class T>
GammaParts<T> gamma_closed_form_raw(const T &kappa, const T &ell)
{
    using std::tanh;
    const T mu0 = kappa / tanh(kappa);
    T sigma;
    const T tol = std::numeric_limits<T>::epsilon() * T(64.0) * kappa;
    const T xi = solve_xi_plus_t(ell, kappa, mu0, sigma, tol, 200);
    return gamma_closed_form_at(kappa, ell, xi);
}

// Below this relative size of |ell| / kappa the Taylor model replaces the
// 0/0 quotient in Gamma_II.
inline constexpr double small_ell_guard = 1e-3;

IndexValue gamma_closed_form(double kappa, double ell);
IndexValue gamma_closed_form_unguarded(double kappa, double ell);
// Validated twin at a point (kappa, ell), using the interval-Newton
// enclosure of xi_+. Throws std::domain_error when a denominator encloses 0.
IndexEnclosure gamma_closed_form_enclosure(double kappa, double ell);

using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

// 2x2 blocks of the reduced expansion at (ell, xi_+(ell)). Mode labels follow
// (L)^p_q: the block mapping Fourier mode q to mode p + q.
struct ReducedBlocks {
    Mat2 L1_m1_1;  // (L^[1])^1_{-1}
    Mat2 L1_m1_0;  // (L^[1])^0_{-1}
    Mat2 L2_m2_1;  // (L^[2])^1_{-2}
    Mat2 A0;
    Mat2 M_plus;
    Mat2 M_minus;
    Vec2 V_plus;
    Vec2 V_minus;
    // Defining matrix i sigma_+ I - L^0 on constants, kept for checks.
    Mat2 A0_inverse;
    double xi = 0.0;
    double sigma = 0.0;
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
};

ReducedBlocks reduced_blocks(double kappa, double ell, double xi);

// J = [[0, -1], [1, 0]], S[B] = J B^* J^{-1}.
Mat2 J_matrix();
Mat2 duality(const Mat2 &B);

// <a, b> = sum conj(a_i) b_i
std::complex<double> inner(const Vec2 &a, const Vec2 &b);

// Reduced 2x2 matrix at eps = 0 in the basis (e^{-i kappa x} V_+, e^{i kappa x} V_-).
Mat2 reduced_D0(double kappa, double ell, double xi);

// Top-right entry of (L^[2])^1_{-2}: the (G^(2))_(-2) coefficient.
double G2_m2(double kappa, double ell, double xi);

// Gamma = -<J^{-1} V_+, N V_-> with N = (L^[2])^1_{-2} + (L^[1])^0_{-1} A0 (L^[1])^1_{-1}.
// Throws EvaluationError when |Im Gamma| > 1e-10 |Gamma|.
IndexValue gamma_matrix(double kappa, double ell);

// Printed closed forms for ell -> 0, held as data so tests can mutate them.
// Each term reads mult * kappa^k * cosh^c * sinh^s * (1 + sinh^2)^onep * P(sinh^2)
// with P given by ascending integer coefficients.
struct CMoreTerm {
    int mult;
    int k;
    int c;
    int s;
    int onep;
    std::vector<int> poly;
};

struct CMoreTable {
    std::vector<CMoreTerm> gamma_I0;  // times kappa^3 / (8 cosh sinh)
    std::vector<CMoreTerm> gamma_II0_num;
    std::vector<CMoreTerm> gamma_II0_den;  // Gamma_II(0) = -kappa^3/2 tanh num/den
    std::vector<CMoreTerm> limit_num;      // lim = kappa^3/(8 cosh sinh) num/den
    std::vector<CMoreTerm> limit_den;

    static const CMoreTable &standard();
};

template <class T>
T eval_cmore(const std::vector<CMoreTerm> &terms, const T &k, const T &C, const T &S)
{
    const T S2 = S * S;
    T sum(0.0);
    for (const auto &t : terms) {
        T p(0.0);
        for (auto it = t.poly.rbegin(); it != t.poly.rend(); ++it) {
            p = p * S2 + T(static_cast<double>(*it));
        }
        T f = T(static_cast<double>(t.mult)) * p;
        for (int i = 0; i < t.k; ++i) {
            f = f * k;
        }
        for (int i = 0; i < t.c; ++i) {
            f = f * C;
        }
        for (int i = 0; i < t.s; ++i) {
            f = f * S;
        }
        for (int i = 0; i < t.onep; ++i) {
            f = f * (T(1.0) + S2);
        }
        sum = sum + f;
    }
    return sum;
}

template <class T>
struct GammaAtZero {
    T gamma_I0;
    T gamma_II0;
    T limit;  // the printed lim_{ell->0} Gamma_ell
};

template <class T>
GammaAtZero<T> gamma_at_zero_t(const T &k, const CMoreTable &tab)
{
    using std::cosh;
    using std::sinh;
    const T S = sinh(k);
    const T C = cosh(k);
    const T k3 = k * k * k;
    const T pref = k3 / (T(8.0) * C * S);
    GammaAtZero<T> g;
    g.gamma_I0 = pref * eval_cmore(tab.gamma_I0, k, C, S);
    g.gamma_II0 = -k3 / T(2.0) * (S / C) * eval_cmore(tab.gamma_II0_num, k, C, S)
                  / eval_cmore(tab.gamma_II0_den, k, C, S);
    g.limit = pref * eval_cmore(tab.limit_num, k, C, S) / eval_cmore(tab.limit_den, k, C, S);
    return g;
}

// Throw std::domain_error unless kappa > 0.
GammaAtZero<double> gamma_at_zero(double kappa, const CMoreTable &tab = CMoreTable::standard());
GammaAtZero<Interval> gamma_at_zero(const Interval &kappa, const CMoreTable &tab = CMoreTable::standard());

// Gamma_I''(0), Gamma_II''(0) from the exponential-polynomial formulas.
template <class T>
GammaParts<T> d2_appendix(const T &k)
{
    using std::exp;
    std::array<T, 14> E;
    E[0] = T(1.0);
    E[1] = exp(T(2.0) * k);
    for (int m = 2; m < 14; ++m) {
        E[m] = E[m - 1] * E[1];
    }
    const T k2 = k * k;
    const T k3 = k2 * k;
    auto kp = [&](int n) {
        T r(1.0);
        for (int i = 0; i < n; ++i) {
            r = r * k;
        }
        return r;
    };
    auto n = [](double v) { return T(v); };
    const T Em1 = E[1] - n(1);
    const T Ep1 = E[1] + n(1);
    const T E2m1 = E[2] - n(1);

    const T d1 = n(16) * E[1] * (E[2] - E[1] + n(1)) * k2 - n(8) * E[1] * E2m1 * k + E2m1 * E2m1;
    const T d2 = n(32) * E[1] * (E[1] - n(2) * E[2] + E[3] + E[4] + n(1)) * k3 - n(48) * E[2] * E2m1 * k2
                 + n(6) * E2m1 * E2m1 * (E[2] + n(1)) * k - E2m1 * E2m1 * E2m1;

    const T gI = k / (n(8) * E[1] * Em1 * Ep1 * Ep1) / d1
                 * (-n(16) * E[1]
                        * (n(6) * E[1] - n(16) * E[2] + n(49) * E[3] - n(49) * E[4] + n(16) * E[5] - n(6) * E[6]
                           + E[7] - n(1))
                        * k3
                    - n(128) * E[2] * (n(8) * E[2] - E[1] + n(8) * E[3] - E[4] + n(2) * E[5] + n(2)) * k2
                    + (n(33) * E[1] + n(312) * E[3] + n(342) * E[4] - n(342) * E[5] - n(312) * E[6]
                       - n(33) * E[8] - n(3) * E[9] + n(3))
                          * k
                    - n(6) * Em1 * Em1 * Ep1 * Ep1 * Ep1
                          * (n(4) * E[1] + n(10) * E[2] + n(4) * E[3] + E[4] + n(1)));

    auto pw = [](const T &x, int m) {
        T r(1.0);
        for (int i = 0; i < m; ++i) {
            r = r * x;
        }
        return r;
    };

    const T P
        = n(524288) * E[7] * Ep1 * pw(E[2] - E[1] + n(1), 2) * kp(10)
          - n(16384) * E[3]
                * (n(6) * E[1] + n(4) * E[2] - n(35) * E[3] - n(19) * E[4] + n(148) * E[5] - n(247) * E[6]
                   + n(247) * E[7] - n(148) * E[8] + n(19) * E[9] + n(35) * E[10] - n(4) * E[11] - n(6) * E[12]
                   + n(3) * E[13] - n(3))
                * kp(9)
          + n(16384) * E[3]
                * (n(98) * E[3] - n(63) * E[2] - E[1] + n(126) * E[4] - n(265) * E[5] + n(121) * E[6]
                   + n(121) * E[7] - n(265) * E[8] + n(126) * E[9] + n(98) * E[10] - n(63) * E[11] - E[12]
                   + n(8) * E[13] + n(8))
                * kp(8)
          - n(1024) * E[2] * E2m1
                * (n(57) * E[1] + n(339) * E[2] - n(429) * E[3] + n(2103) * E[4] + n(2229) * E[5]
                   + n(1346) * E[6] + n(1346) * E[7] + n(2229) * E[8] + n(2103) * E[9] - n(429) * E[10]
                   + n(339) * E[11] + n(57) * E[12] + n(19) * E[13] + n(19))
                * kp(7)
          - n(1024) * E[2] * pw(Em1, 2) * pw(Ep1, 3)
                * (n(34) * E[1] + n(436) * E[2] + n(1358) * E[3] - n(1113) * E[4] + n(792) * E[5]
                   - n(1113) * E[6] + n(1358) * E[7] + n(436) * E[8] + n(34) * E[9] - n(67) * E[10] - n(67))
                * kp(6)
          - n(64) * E[1] * pw(Em1, 3) * pw(Ep1, 4)
                * (n(1047) * E[1] + n(5045) * E[2] + n(3676) * E[3] - n(3990) * E[4] - n(19046) * E[5]
                   - n(3990) * E[6] + n(3676) * E[7] + n(5045) * E[8] + n(1047) * E[9] + n(49) * E[10] + n(49))
                * kp(5)
          + n(64) * E[1] * pw(E2m1, 4)
                * (n(225) * E[1] + n(913) * E[2] + n(483) * E[3] + n(12913) * E[4] + n(12913) * E[5]
                   + n(483) * E[6] + n(913) * E[7] + n(225) * E[8] + n(130) * E[9] + n(130))
                * kp(4)
          - n(4) * pw(E2m1, 5)
                * (n(1537) * E[1] + n(13444) * E[2] + n(42404) * E[3] + n(1838) * E[4] + n(1838) * E[5]
                   + n(42404) * E[6] + n(13444) * E[7] + n(1537) * E[8] + n(9) * E[9] + n(9))
                * k3
          - n(12) * pw(E2m1, 6)
                * (n(499) * E[1] + n(1389) * E[2] - n(1327) * E[3] - n(1327) * E[4] + n(1389) * E[5]
                   + n(499) * E[6] - n(9) * E[7] - n(9))
                * k2
          - n(3) * pw(E2m1, 7)
                * (n(159) * E[1] - n(1010) * E[2] - n(1010) * E[3] + n(159) * E[4] + n(155) * E[5] + n(155))
                * k
          + n(24) * pw(E2m1, 8) * (n(11) * E[1] + n(11) * E[2] + n(3) * E[3] + n(3));

    const T gII = k * (n(1) / E[1] - n(1)) / (n(24) * Ep1 * Ep1) / d1 / (d2 * d2) * P;
    return {gI, gII};
}

// Gamma_I''(0), Gamma_II''(0) from the F-derivative expansions, together with
// Gamma_I(0), Gamma_II(0) from the same route.
template <class T>
struct AsympValues {
    T gamma_I0, gamma_II0, d2_I, d2_II;
};

template <class T, class JetF>
AsympValues<T> asymp_route(const T &k, const JetF &f)
{
    using std::cosh;
    using std::sinh;
    const auto h = second_harmonics_t(k);
    const T S = sinh(k);
    const T C = cosh(k);
    const T Th = S / C;
    const T C2 = C * C;
    const T S2 = S * S;
    const T Fk = f[0];
    const T d1 = f[1];
    const T d2 = f[2];
    const T d3 = f[3];
    const T d4 = f[4];
    auto n = [](double v) { return T(v); };

    AsympValues<T> a;
    a.gamma_I0 = n(2) * k * Th * h.V2_m2 + Th * Th * h.a2_m2 + k * k * (n(1) + Th * Th) * h.eta2_m2
                 + k * k * k * Th * h.eta1sq_m2;
    const T hGI2 = h.V2_m2 * n(2) * Fk * d1 * d1 / (k * k * d2) + h.a2_m2 * Th * d1 * d1 * d1 / (k * k * d2)
                   - h.eta2_m2 * (n(1) - d1 / (k * d2) - n(2) * Th * d1 * d1 * d1 / d2)
                   + h.eta1sq_m2
                         * (k * Th * (n(1) - k * Th) * (n(1) - d1 / (k * d2)) - k * d1 * d1 * d1 / d2
                            + n(4) * Fk * d1 * d1 / d2);
    const T Q = k * d2 - d1 + d1 * d1 * d1;
    const T W = k * d2 - d1;
    a.gamma_II0 = k * k / n(4) * (n(4) * S2 * d1 + n(4) * Th * Fk * d1 * d1 - Th / C2 * k * W) / Q;
    const T G0 = a.gamma_II0;
    const T R = n(3) - n(4) * d1 / (k * d2) + k * (d2 / d1 - n(2) * d3 / d2) + k * d4 * d1 / (n(3) * d2 * d2);
    const T d1_2 = d1 * d1;
    const T d1_3 = d1_2 * d1;
    const T rhs = n(4) * G0 / (k * d2) * (W * W / n(3) + d1_2 * (-d2 / k * W + d3 * d1 / n(3)))
                  + G0 * (n(1) - d1_2) * d1 / (k * k) * R + d1 / n(4) * (n(4) * S2 + k * Th / C2 + n(4) * Th * Fk * d1) * R
                  + n(1) / (k * d2)
                        * ((k * k * k * Th / C2 / n(3) + S2 * (n(1) - k * Th) * (n(1) - k * Th)) * W * W
                           + n(2) * k * k * Th * Fk * d1 * (W * d2 / k - d3 * d1 / n(3)) - d1 * W * k * C * S
                           - W * Fk * d1_2 * n(2) * S * (k * S + n(2) * C)
                           - W * d1_3 * k * Th * (k * Th * (n(3) * S2 + n(4)) - n(2) * S2)
                           + d1_2 * d1_2 * n(3) * k * S * C - d1_2 * d1_3 * n(2) * k * S2 * Fk);
    const T hGII2 = rhs / (n(4) * Q);
    a.d2_I = n(2) * hGI2;
    a.d2_II = n(2) * hGII2;
    return a;
}

struct SecondDerivative {
    double d2_I = 0.0;   // Gamma_I''(0)
    double d2_II = 0.0;  // Gamma_II''(0)
    double value = 0.0;  // sum
    double asymp_value = 0.0;
    double relative_gap = 0.0;
};

// Both routes; throws EvaluationError when they differ by more than 1e-9 relative.
SecondDerivative gamma_second_derivative(double kappa);

struct SecondDerivativeEnclosure {
    Interval appendix;
    Interval asymp;
    Interval value;  // intersection of both routes
};

SecondDerivativeEnclosure gamma_second_derivative(const Interval &kappa);

// Denominator cleared from Gamma(kappa, 0):
// Gamma(kappa, 0) = kappa^3 / (4 e^{2 kappa} (e^{4 kappa} - 1)) gamma_top / gamma_bot.
template <class T>
T gamma_bot_t(const T &k)
{
    using std::exp;
    const T e = exp(T(2.0) * k);
    const T e2 = e * e;
    const T e3 = e2 * e;
    const T e4 = e2 * e2;
    const T e5 = e4 * e;
    const T e6 = e3 * e3;
    const T k2 = k * k;
    const T k3 = k2 * k;
    auto n = [](double v) { return T(v); };
    return (n(6) * k - n(1)) * e6 + n(32) * k3 * e5 + (n(32) * k3 - n(48) * k2 - n(6) * k + n(3)) * e4
           - n(64) * k3 * e3 + (n(32) * k3 + n(48) * k2 - n(6) * k - n(3)) * e2 + n(32) * k3 * e
           + (n(6) * k + n(1));
}

double gamma_bot(double kappa);
Interval gamma_bot(const Interval &kappa);

// CSV rows: kappa, ell, gamma_I, gamma_II, gamma, route.
void write_index_csv(std::ostream &os, const std::vector<IndexValue> &rows);

// Closed-form scan over ell values, serial reference and OpenMP version.
std::vector<IndexValue> index_scan_serial(double kappa, const std::vector<double> &ells);
std::vector<IndexValue> index_scan(double kappa, const std::vector<double> &ells);

} // namespace stokes

#endif
