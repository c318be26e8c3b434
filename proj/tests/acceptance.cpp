// One pass/fail line per acceptance criterion; exit status 0 iff all pass.

#include <stokes/certify.hpp>
#include <stokes/collision.hpp>
#include <stokes/index.hpp>
#include <stokes/spectrum.hpp>

#include "mpfr_oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace stokes;

namespace
{

using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double> &x, const std::vector<double> &y)
{
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome criterion1(const GammaTopTable &tab)
{
    CertifyOptions opt;
    opt.table = tab;
    const auto t0 = std::chrono::steady_clock::now();
    const Certificate c = run_full_certificate(opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool checks = true;
    for (const auto &k : c.checks) {
        checks = checks && k.holds;
    }
    Outcome o;
    o.pass = c.verified && checks && c.vanishing.holds && c.tail_bound_checked && c.d2_enclosure.hi() < 0;
    std::ostringstream os;
    os << "outcome=" << (c.verified ? "verified" : "failed") << " leaves(d7)=" << c.leaf_count(Quantity::gamma_top_d7)
       << " leaves(gamma_top)=" << c.leaf_count(Quantity::gamma_top) << " d2=" << c.d2_enclosure
       << fmt(" time=%.2fs", secs);
    if (!c.failures.empty()) {
        os << " first failure: " << c.failures.front();
    }
    o.detail = os.str();
    return o;
}

Outcome criterion2()
{
    double worst = 0.0;
    for (double k : {0.5, 1.0, 2.0}) {
        for (double l : {0.01, 0.05, 0.1}) {
            const double a = gamma_closed_form(k, l).gamma;
            const double b = gamma_matrix(k, l).gamma;
            worst = std::max(worst, std::fabs(a - b) / std::fabs(a));
        }
    }
    return {worst <= 1e-8, fmt("max relative gap %.3g on the 9-point grid", worst)};
}

Outcome criterion3(const CMoreTable &tab)
{
    bool pass = true;
    std::ostringstream os;
    for (double kd : {0.5, 1.0, 2.0}) {
        // ell = 1e-4 in binary64 with the unguarded quotient
        const double l = 1e-4;
        const GammaAtZero<double> z = gamma_at_zero(kd, tab);
        const SecondDerivative d2 = gamma_second_derivative(kd);
        const double g = gamma_closed_form_unguarded(kd, l).gamma;
        const double r_lim = std::fabs(g - (z.limit + 0.5 * l * l * d2.value)) / std::fabs(g);
        const double r_sum = std::fabs(g - (z.gamma_I0 + z.gamma_II0 + 0.5 * l * l * d2.value)) / std::fabs(g);
        const double r = std::max(r_lim, r_sum);

        // Slope of the Taylor residual over [1e-3, 1e-1], 50 digits.
        const Big k(kd);
        const GammaAtZero<Big> zb = gamma_at_zero_t(k, tab);
        const GammaParts<Big> db = d2_appendix(k);
        const Big d2b = db.gamma_I + db.gamma_II;
        std::vector<double> ells;
        std::vector<double> res_lim;
        std::vector<double> res_sum;
        for (int i = 0; i <= 8; ++i) {
            const double ld = std::pow(10.0, -3.0 + 0.25 * i);
            const Big lb(ld);
            const GammaParts<Big> gb = gamma_closed_form_raw(k, lb);
            const Big gsum = gb.gamma_I + gb.gamma_II;
            const Big quad = lb * lb * d2b / 2;
            ells.push_back(ld);
            res_lim.push_back(static_cast<double>(abs(gsum - zb.limit - quad)));
            res_sum.push_back(static_cast<double>(abs(gsum - zb.gamma_I0 - zb.gamma_II0 - quad)));
        }
        const double s = std::min(loglog_slope(ells, res_lim), loglog_slope(ells, res_sum));
        const bool ok = r <= 1e-5 && s >= 3.5;
        pass = pass && ok;
        os << "k=" << kd << fmt(": residual(1e-4)=%.2g", r) << fmt(" slope=%.3f; ", s);
    }
    return {pass, os.str()};
}

Outcome criterion4()
{
    const WaveParams p = WaveParams::from_kappa(Interval(1.0));
    const std::vector<CollisionPoint> pts = sample_curve(p, 0.3, 50);
    double worst_res = 0.0;
    double worst_odd = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const CollisionPoint &c = pts[i];
        const double a = lambda_im(1, Branch::minus, c.ell, c.xi_plus, 1.0, p.mu0_f());
        const double b = lambda_im(-1, Branch::plus, c.ell, c.xi_plus, 1.0, p.mu0_f());
        worst_res = std::max(worst_res, std::fabs(a - b));
        const CollisionPoint &m = pts[pts.size() - 1 - i];
        worst_odd = std::max(worst_odd, std::fabs(m.xi_plus + c.xi_plus));
    }
    // xi_+/ell - s = O(ell^2)
    const double s = xi_plus_slope(1.0);
    std::vector<double> ells;
    std::vector<double> err;
    for (double l = 0.01; l <= 0.1 + 1e-12; l += 0.01) {
        ells.push_back(l);
        err.push_back(std::fabs(solve_xi_plus(l, p).xi_plus / l - s));
    }
    const double order = loglog_slope(ells, err);
    const bool pass = worst_res <= 1e-12 && worst_odd <= 1e-14 && std::fabs(order - 2.0) < 0.1;
    return {pass, fmt("max |lambda^-_1 - lambda^+_-1| = %.2g", worst_res) + fmt(", oddness %.2g", worst_odd) +
                      fmt(", slope error order %.3f", order)};
}

double match_error(std::vector<std::complex<double>> expect, std::vector<std::complex<double>> got)
{
    double worst = 0.0;
    for (const auto &e : expect) {
        auto it = std::min_element(got.begin(), got.end(),
                                   [&](const auto &a, const auto &b) { return std::abs(a - e) < std::abs(b - e); });
        worst = std::max(worst, std::abs(*it - e));
        got.erase(it);
    }
    return worst;
}

Outcome criterion5()
{
    const WaveParams p = WaveParams::from_kappa(Interval(1.0));
    const double xi = solve_xi_plus(0.1, p).xi_plus;
    const int N = 24;
    std::vector<std::complex<double>> closed;
    for (int n = -N; n <= N; ++n) {
        closed.push_back(lambda(n, Branch::plus, 0.1, xi, p).value);
        closed.push_back(lambda(n, Branch::minus, 0.1, xi, p).value);
    }
    const double e = match_error(closed, eigenvalues(assemble(N, 1.0, 0.1, xi, 0.0)));
    return {e <= 1e-12, fmt("max distance to closed form %.2g over 98 eigenvalues", e)};
}

Outcome criterion6()
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> eps{0.005, 0.01, 0.02};
    std::vector<double> growth;
    double ratio = 0.0;
    double pairing = 0.0;
    ScanOptions opt;
    opt.N = 24;
    for (double e : eps) {
        const GrowthScan g = growth_scan(1.0, 0.1, e, opt);
        growth.push_back(g.best.max_growth);
        if (e == 0.01) {
            ratio = g.best.max_growth / g.predicted_C;
        }
        const auto ev = eigenvalues(assemble(opt.N, 1.0, 0.1, g.best.xi, e));
        std::vector<std::complex<double>> mirrored;
        for (const auto &l : ev) {
            mirrored.push_back(-std::conj(l));
        }
        pairing = std::max(pairing, match_error(mirrored, ev));
    }
    const double slope = loglog_slope(eps, growth);
    ScanOptions o16 = opt;
    o16.N = 16;
    ScanOptions o32 = opt;
    o32.N = 32;
    const double g16 = growth_scan(1.0, 0.1, 0.01, o16).best.max_growth;
    const double g32 = growth_scan(1.0, 0.1, 0.01, o32).best.max_growth;
    const double robust = std::fabs(g16 - g32) / g32;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = std::fabs(slope - 2.0) <= 0.1 && std::fabs(ratio - 1.0) <= 0.2 && pairing <= 1e-8 &&
                      robust < 0.01 && secs < 60.0;
    return {pass, fmt("slope %.4f", slope) + fmt(", growth/prediction %.4f", ratio) + fmt(", pairing %.2g", pairing) +
                      fmt(", N16 vs N32 %.2g", robust) + fmt(", time %.1fs", secs)};
}

Outcome criterion7()
{
    long trials = 0;
    long violations = 0;
    long mono = 0;
    long mono_bad = 0;
    std::string first;
    for (oracle::Fn f : oracle::all_functions) {
        const auto c = oracle::containment_trials(f, 100000, 2024 + static_cast<int>(f));
        const auto m = oracle::monotonicity_trials(f, 10000, 99 + static_cast<int>(f));
        trials += c.trials;
        violations += c.violations;
        mono += m.trials;
        mono_bad += m.violations;
        if (first.empty() && !c.first_violation.empty()) {
            first = c.first_violation;
        }
        if (first.empty() && !m.first_violation.empty()) {
            first = m.first_violation;
        }
    }
    std::ostringstream os;
    os << trials << " containment trials (" << violations << " violations), " << mono << " nested pairs (" << mono_bad
       << " violations) over 12 operations";
    if (!first.empty()) {
        os << "; first: " << first;
    }
    return {violations == 0 && mono_bad == 0, os.str()};
}

Outcome criterion8()
{
    struct Mutation {
        const char *name;
        std::function<void(GammaTopTable &, CMoreTable &)> apply;
    };
    const std::vector<Mutation> mutations{
        {"gamma_top e^{20k} constant", [](GammaTopTable &g, CMoreTable &) { g.terms[10].poly[0] = -g.terms[10].poly[0]; }},
        {"gamma_top e^{10k} factor", [](GammaTopTable &g, CMoreTable &) { g.terms[5].mult = -g.terms[5].mult; }},
        {"gamma_top e^{14k} k^2", [](GammaTopTable &g, CMoreTable &) { g.terms[7].poly[2] = -g.terms[7].poly[2]; }},
        {"limit numerator S^4", [](GammaTopTable &, CMoreTable &c) { c.limit_num[0].poly[2] = -c.limit_num[0].poly[2]; }},
        {"Gamma_II(0) denominator", [](GammaTopTable &, CMoreTable &c) { c.gamma_II0_den[1].mult = -c.gamma_II0_den[1].mult; }},
    };
    int caught = 0;
    std::ostringstream os;
    for (const auto &m : mutations) {
        GammaTopTable g = GammaTopTable::standard();
        CMoreTable c = CMoreTable::standard();
        m.apply(g, c);
        const bool c1 = criterion1(g).pass;
        const bool c3 = criterion3(c).pass;
        const bool hit = !c1 || !c3;
        caught += hit ? 1 : 0;
        os << m.name << ": " << (hit ? "caught" : "MISSED") << " (c1 " << (c1 ? "pass" : "fail") << ", c3 "
           << (c3 ? "pass" : "fail") << "); ";
    }
    return {caught == static_cast<int>(mutations.size()), os.str()};
}

} // namespace

int main()
{
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    const std::vector<std::pair<int, std::function<Outcome()>>> all{
        {1, [] { return criterion1(GammaTopTable::standard()); }},
        {2, criterion2},
        {3, [] { return criterion3(CMoreTable::standard()); }},
        {4, criterion4},
        {5, criterion5},
        {6, criterion6},
        {7, criterion7},
        {8, criterion8},
    };
    int failed = 0;
    for (const auto &[n, f] : all) {
        Outcome o;
        try {
            o = f();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %d: %s  %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
