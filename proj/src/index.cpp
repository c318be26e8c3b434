#include <stokes/index.hpp>

#include <stokes/io.hpp>
#include <stokes/parallel.hpp>

#include <ostream>

namespace stokes
{

namespace
{

constexpr std::complex<double> I_unit(0.0, 1.0);

void require_positive(double kappa)
{
    if (!(kappa > 0.0)) {
        throw std::domain_error("kappa must be positive");
    }
}

IndexValue make_value(double kappa, double ell, double gI, double gII, Route route)
{
    return {gI, gII, gI + gII, route, ell, kappa};
}

} // namespace

const char *to_string(Route r)
{
    switch (r) {
    case Route::closed_form:
        return "closed_form";
    case Route::matrix:
        return "matrix";
    case Route::taylor:
        return "taylor";
    }
    return "unknown";
}

IndexValue gamma_closed_form_unguarded(double kappa, double ell)
{
    require_positive(kappa);
    const WaveParams params = WaveParams::from_kappa(Interval(kappa));
    const CollisionPoint p = solve_xi_plus(ell, params);
    const GammaParts<double> g = gamma_closed_form_at(kappa, ell, p.xi_plus);
    if (!std::isfinite(g.gamma_I) || !std::isfinite(g.gamma_II)) {
        throw EvaluationError("gamma_closed_form: non-finite value (denominator vanished)");
    }
    return make_value(kappa, ell, g.gamma_I, g.gamma_II, Route::closed_form);
}

IndexValue gamma_closed_form(double kappa, double ell)
{
    require_positive(kappa);
    if (std::fabs(ell) < small_ell_guard * kappa) {
        const GammaAtZero<double> z = gamma_at_zero(kappa);
        const SecondDerivative d = gamma_second_derivative(kappa);
        const double h = 0.5 * ell * ell;
        return make_value(kappa, ell, z.gamma_I0 + h * d.d2_I, z.gamma_II0 + h * d.d2_II, Route::taylor);
    }
    return gamma_closed_form_unguarded(kappa, ell);
}

IndexEnclosure gamma_closed_form_enclosure(double kappa, double ell)
{
    require_positive(kappa);
    if (ell == 0.0) {
        throw std::domain_error("gamma_closed_form_enclosure: ell must be nonzero");
    }
    const Interval k(kappa);
    const WaveParams params = WaveParams::from_kappa(k);
    const Interval xi = xi_plus_enclosure(ell, params);
    const GammaParts<Interval> g = gamma_closed_form_at(k, Interval(ell), xi);
    return {g.gamma_I, g.gamma_II, g.gamma_I + g.gamma_II};
}

Mat2 J_matrix()
{
    Mat2 J;
    J << 0.0, -1.0, 1.0, 0.0;
    return J;
}

Mat2 duality(const Mat2 &B)
{
    const Mat2 J = J_matrix();
    return J * B.adjoint() * J.inverse();
}

std::complex<double> inner(const Vec2 &a, const Vec2 &b)
{
    return a.dot(b);
}

double G2_m2(double kappa, double ell, double xi)
{
    const SecondHarmonicCoeffs h = second_harmonics(kappa);
    const double F1 = F(omega(1, ell, xi, kappa));
    const double Fm = F(omega(-1, ell, xi, kappa));
    const double F0 = F(omega(0, ell, xi, kappa));
    const double F1s = F1 * F1;
    const double Fms = Fm * Fm;
    const double l2 = ell * ell;
    return (-F1s * Fms + l2 + xi * xi - kappa * kappa) * h.eta2_m2 + F1s * Fms * F0 * F0 * h.eta1sq_m2
           - 0.5 * ((l2 + (xi - kappa) * (xi - kappa)) * F1s + (l2 + (kappa + xi) * (kappa + xi)) * Fms) * h.eta1sq_m2;
}

ReducedBlocks reduced_blocks(double kappa, double ell, double xi)
{
    require_positive(kappa);
    const double k = kappa;
    const double S = std::sinh(k);
    const double C = std::cosh(k);
    const double mu0 = k / std::tanh(k);
    const SecondHarmonicCoeffs h = second_harmonics(k);
    const double Fk = F(k);
    const double F1 = F(omega(1, ell, xi, k));
    const double Fm = F(omega(-1, ell, xi, k));
    const double F0 = F(omega(0, ell, xi, k));
    const double l2 = ell * ell;

    ReducedBlocks b;
    b.xi = xi;
    b.L1_m1_1 << -I_unit * xi * k * C, (l2 - F0 * F0 * F1 * F1 + xi * (k + xi)) * S, k * k * S, -I_unit * (k + xi) * k * C;
    b.L1_m1_1 *= 0.5;
    b.L1_m1_0 << -I_unit * (xi - k) * k * C, (l2 - F0 * F0 * Fm * Fm + xi * (xi - k)) * S, k * k * S, -I_unit * xi * k * C;
    b.L1_m1_0 *= 0.5;
    b.L2_m2_1 << -I_unit * (xi - k) * h.V2_m2, G2_m2(k, ell, xi), -h.a2_m2, -I_unit * (k + xi) * h.V2_m2;

    b.sigma = xi + std::sqrt(mu0) * (Fm - F1) / 2.0;
    Mat2 L00;
    L00 << I_unit * xi, F0 * F0, -mu0, I_unit * xi;
    b.A0_inverse = I_unit * b.sigma * Mat2::Identity() - L00;
    b.A0 = b.A0_inverse.inverse();

    b.alpha_plus = Fm * Fk / k;
    b.alpha_minus = F1 * Fk / k;
    b.V_plus << -I_unit * b.alpha_plus, 1.0;
    b.V_minus << I_unit * b.alpha_minus, 1.0;
    b.M_plus << 1.0, -I_unit * b.alpha_plus, -1.0 / (I_unit * b.alpha_plus), 1.0;
    b.M_plus *= 0.5;
    b.M_minus << 1.0, I_unit * b.alpha_minus, 1.0 / (I_unit * b.alpha_minus), 1.0;
    b.M_minus *= 0.5;
    return b;
}

Mat2 reduced_D0(double kappa, double ell, double xi)
{
    const ReducedBlocks b = reduced_blocks(kappa, ell, xi);
    const double mu0 = kappa / std::tanh(kappa);
    auto block = [&](int m) {
        const double F_m = F(omega(m, ell, xi, kappa));
        Mat2 L;
        L << I_unit * (m * kappa + xi), F_m * F_m, -mu0, I_unit * (m * kappa + xi);
        return L;
    };
    const Mat2 Jinv = J_matrix().inverse();
    const Vec2 wp = Jinv * b.V_plus;
    const Vec2 wm = Jinv * b.V_minus;
    Mat2 D = Mat2::Zero();
    // Basis functions live on distinct Fourier modes, so D0 is diagonal.
    D(0, 0) = inner(wp, block(-1) * b.V_plus) / inner(wp, b.V_plus);
    D(1, 1) = inner(wm, block(1) * b.V_minus) / inner(wm, b.V_minus);
    return D;
}

IndexValue gamma_matrix(double kappa, double ell)
{
    require_positive(kappa);
    const WaveParams params = WaveParams::from_kappa(Interval(kappa));
    const CollisionPoint p = solve_xi_plus(ell, params);
    const ReducedBlocks b = reduced_blocks(kappa, ell, p.xi_plus);
    const Vec2 x = J_matrix().inverse() * b.V_plus;
    const std::complex<double> gI = -inner(x, b.L2_m2_1 * b.V_minus);
    const std::complex<double> gII = -inner(x, b.L1_m1_0 * b.A0 * b.L1_m1_1 * b.V_minus);
    const std::complex<double> g = gI + gII;
    if (std::fabs(g.imag()) > 1e-10 * std::abs(g)) {
        throw EvaluationError("gamma_matrix: imaginary residue exceeds tolerance");
    }
    return make_value(kappa, ell, gI.real(), gII.real(), Route::matrix);
}

const CMoreTable &CMoreTable::standard()
{
    static const CMoreTable table{
        // 8 S^4 + 8 S^2 + 9
        {{1, 0, 0, 0, 0, {9, 8, 8}}},
        // k^3 (1 + 4 S^2) + 4 k^2 C S + k S^2 (1 + S^2)(8 S^2 + 19) + 4 C S^3 (1 + S^2)(3 + 2 S^2)
        {{1, 3, 0, 0, 0, {1, 4}}, {4, 2, 1, 1, 0, {1}}, {1, 1, 0, 2, 1, {19, 8}}, {4, 0, 1, 3, 1, {3, 2}}},
        // k^3 (8 S^4 + 10 S^2 + 1) - 3 k^2 C S + 3 k S^2 (1 + S^2)(2 S^2 + 1) - C S^3 (1 + S^2)
        {{1, 3, 0, 0, 0, {1, 10, 8}}, {-3, 2, 1, 1, 0, {1}}, {3, 1, 0, 2, 1, {1, 2}}, {-1, 0, 1, 3, 1, {1}}},
        {{1, 3, 0, 0, 0, {9, 94, 144, 144, 64}},
         {-1, 2, 1, 1, 0, {27, 40, 24}},
         {1, 1, 0, 2, 1, {27, 2, 40, 48}},
         {-1, 0, 1, 3, 1, {9, 56, 40}}},
        {{1, 3, 0, 0, 0, {1, 10, 8}}, {-3, 2, 1, 1, 0, {1}}, {3, 1, 0, 2, 1, {1, 2}}, {-1, 0, 1, 3, 1, {1}}},
    };
    return table;
}

GammaAtZero<double> gamma_at_zero(double kappa, const CMoreTable &tab)
{
    require_positive(kappa);
    return gamma_at_zero_t(kappa, tab);
}

GammaAtZero<Interval> gamma_at_zero(const Interval &kappa, const CMoreTable &tab)
{
    if (!kappa.is_positive()) {
        throw std::domain_error("kappa must be positive");
    }
    return gamma_at_zero_t(kappa, tab);
}

SecondDerivative gamma_second_derivative(double kappa)
{
    require_positive(kappa);
    // The exponential polynomial cancels heavily; extended precision keeps
    // the two routes comparable at the 1e-9 level.
    const long double k = kappa;
    const GammaParts<long double> ap = d2_appendix(k);
    const AsympValues<long double> as = asymp_route(k, F(k, 4));
    SecondDerivative d;
    d.d2_I = static_cast<double>(ap.gamma_I);
    d.d2_II = static_cast<double>(ap.gamma_II);
    d.value = static_cast<double>(ap.gamma_I + ap.gamma_II);
    d.asymp_value = static_cast<double>(as.d2_I + as.d2_II);
    d.relative_gap = std::fabs(d.value - d.asymp_value) / std::fabs(d.value);
    if (!(d.relative_gap <= 1e-9)) {
        throw EvaluationError("gamma_second_derivative: routes disagree");
    }
    return d;
}

SecondDerivativeEnclosure gamma_second_derivative(const Interval &kappa)
{
    if (!kappa.is_positive()) {
        throw std::domain_error("kappa must be positive");
    }
    const GammaParts<Interval> ap = d2_appendix(kappa);
    const AsympValues<Interval> as = asymp_route(kappa, F(kappa, 4));
    SecondDerivativeEnclosure e;
    e.appendix = ap.gamma_I + ap.gamma_II;
    e.asymp = as.d2_I + as.d2_II;
    if (e.appendix.hi() < e.asymp.lo() || e.asymp.hi() < e.appendix.lo()) {
        throw EvaluationError("gamma_second_derivative: route enclosures are disjoint");
    }
    e.value = intersect(e.appendix, e.asymp);
    return e;
}

double gamma_bot(double kappa)
{
    return gamma_bot_t(kappa);
}

Interval gamma_bot(const Interval &kappa)
{
    return gamma_bot_t(kappa);
}

void write_index_csv(std::ostream &os, const std::vector<IndexValue> &rows)
{
    os << "kappa,ell,gamma_I,gamma_II,gamma,route\n";
    for (const auto &r : rows) {
        os << shortest(r.kappa) << ',' << shortest(r.ell) << ',' << shortest(r.gamma_I) << ','
           << shortest(r.gamma_II) << ',' << shortest(r.gamma) << ',' << to_string(r.route) << '\n';
    }
}

std::vector<IndexValue> index_scan_serial(double kappa, const std::vector<double> &ells)
{
    std::vector<IndexValue> out;
    out.reserve(ells.size());
    for (double l : ells) {
        out.push_back(gamma_closed_form(kappa, l));
    }
    return out;
}

std::vector<IndexValue> index_scan(double kappa, const std::vector<double> &ells)
{
    const int n = static_cast<int>(ells.size());
    std::vector<IndexValue> out(ells.size());
    bool failed = false;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = gamma_closed_form(kappa, ells[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp atomic write
            failed = true;
        }
    }
    if (failed) {
        return index_scan_serial(kappa, ells);
    }
    return out;
}

} // namespace stokes
