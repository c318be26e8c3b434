#include <stokes/interval.hpp>

#include "dd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace stokes
{

namespace rounding
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double max_double = std::numeric_limits<double>::max();

// Below this magnitude fma residuals may underflow and stop being exact; we
// then fall back to unconditional one-ulp widening.
constexpr double exact_residual_floor = 0x1p-960;

} // namespace

double next_up(double x) noexcept
{
    return std::nextafter(x, inf);
}

double next_down(double x) noexcept
{
    return std::nextafter(x, -inf);
}

double add_down(double a, double b) noexcept
{
    const double s = a + b;
    if (std::isinf(s)) {
        return s > 0 ? max_double : s;
    }
    const auto [r, e] = detail::two_sum(a, b);
    return e < 0 ? next_down(r) : r;
}

double add_up(double a, double b) noexcept
{
    const double s = a + b;
    if (std::isinf(s)) {
        return s < 0 ? -max_double : s;
    }
    const auto [r, e] = detail::two_sum(a, b);
    return e > 0 ? next_up(r) : r;
}

double mul_down(double a, double b) noexcept
{
    const double p = a * b;
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    if (std::isinf(p)) {
        return p > 0 ? max_double : p;
    }
    if (std::fabs(p) < exact_residual_floor) {
        return next_down(p);
    }
    const double e = std::fma(a, b, -p);
    return e < 0 ? next_down(p) : p;
}

double mul_up(double a, double b) noexcept
{
    const double p = a * b;
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    if (std::isinf(p)) {
        return p < 0 ? -max_double : p;
    }
    if (std::fabs(p) < exact_residual_floor) {
        return next_up(p);
    }
    const double e = std::fma(a, b, -p);
    return e > 0 ? next_up(p) : p;
}

double div_down(double a, double b) noexcept
{
    const double q = a / b;
    if (a == 0.0) {
        return 0.0;
    }
    if (std::isinf(q)) {
        return q > 0 ? max_double : q;
    }
    if (std::fabs(q) < exact_residual_floor || std::fabs(a) < exact_residual_floor) {
        return next_down(q);
    }
    // a - q*b is exact, and a/b - q has the sign of (a - q*b)/b.
    const double r = std::fma(-q, b, a);
    const bool below = (r > 0 && b < 0) || (r < 0 && b > 0);
    return below ? next_down(q) : q;
}

double div_up(double a, double b) noexcept
{
    const double q = a / b;
    if (a == 0.0) {
        return 0.0;
    }
    if (std::isinf(q)) {
        return q < 0 ? -max_double : q;
    }
    if (std::fabs(q) < exact_residual_floor || std::fabs(a) < exact_residual_floor) {
        return next_up(q);
    }
    const double r = std::fma(-q, b, a);
    const bool above = (r > 0 && b > 0) || (r < 0 && b < 0);
    return above ? next_up(q) : q;
}

double sqrt_down(double a) noexcept
{
    const double s = std::sqrt(a);
    if (a == 0.0 || std::isinf(a)) {
        return s;
    }
    if (a < exact_residual_floor) {
        return std::max(0.0, next_down(s));
    }
    const double r = std::fma(-s, s, a);
    return r < 0 ? next_down(s) : s;
}

double sqrt_up(double a) noexcept
{
    const double s = std::sqrt(a);
    if (a == 0.0 || std::isinf(a)) {
        return s;
    }
    if (a < exact_residual_floor) {
        return next_up(s);
    }
    const double r = std::fma(-s, s, a);
    return r > 0 ? next_up(s) : s;
}

namespace
{

using detail::dd;

// Relative error budgets of the double-double kernels below. The actual
// errors are several orders of magnitude smaller (a few dozen dd operations
// at ~2^-104 each plus truncation remainders below 2^-120); the budgets only
// need to stay far below 2^-53 for the final enclosures to be one-ulp tight.
constexpr double exp_rel_err = 0x1p-85;
constexpr double hyp_rel_err = 0x1p-80;

// ln 2 as an unevaluated sum, |ln2 - (hi + lo)| < 1e-33.
constexpr dd ln2_dd{0x1.62e42fefa39efp-1, 0x1.abc9e3b39803fp-56};

// Value m * 2^e with m in double-double.
struct scaled_dd {
    dd m;
    int e;
};

// exp(x) for |x| <= 745, as m * 2^e with m in [0.7, 1.42].
scaled_dd exp_scaled(double x) noexcept
{
    const double k = std::nearbyint(x / ln2_dd.hi);
    // r = x - k ln2, |r| <= 0.35.
    const dd kl_hi = detail::two_prod(k, ln2_dd.hi);
    const dd kl_lo = detail::two_prod(k, ln2_dd.lo);
    const dd r = dd{x, 0.0} - kl_hi - kl_lo;

    // Taylor series to degree 27: remainder < e^0.35 0.35^28 / 28! < 1e-41.
    constexpr int degree = 27;
    dd p{1.0, 0.0};
    for (int j = degree; j >= 1; --j) {
        p = dd{1.0, 0.0} + (p * r) / static_cast<double>(j);
    }
    return {p, static_cast<int>(k)};
}

// Rounds a double-double approximation v (relative error <= rel) outward.
std::pair<double, double> outward(dd v, double rel) noexcept
{
    const double slack = rel * std::fabs(v.hi);
    const double below = v.lo - slack;
    const double above = v.lo + slack;
    double down = v.hi;
    double up = v.hi;
    if (below < 0) {
        down = next_down(v.hi);
        if (v.hi - down < -below) {
            down = next_down(down);
        }
    }
    if (above > 0) {
        up = next_up(v.hi);
        if (up - v.hi < above) {
            up = next_up(up);
        }
    }
    return {down, up};
}

std::pair<double, double> outward_scaled(scaled_dd v, double rel) noexcept
{
    auto [d, u] = outward(v.m, rel);
    // Scaling by 2^e is exact in the normal range; otherwise widen once more.
    const double sd = std::ldexp(d, v.e);
    const double su = std::ldexp(u, v.e);
    const bool exact = std::fabs(sd) >= std::numeric_limits<double>::min() && std::isfinite(su);
    if (exact) {
        return {sd, su};
    }
    double lo = sd;
    double hi = su;
    if (std::isinf(lo)) {
        lo = max_double;
    } else if (lo != 0.0) {
        lo = std::max(0.0, next_down(lo));
    }
    if (!std::isinf(hi)) {
        hi = next_up(hi);
    }
    return {lo, hi};
}

} // namespace

std::pair<double, double> exp_bounds(double x) noexcept
{
    if (x == 0.0) {
        return {1.0, 1.0};
    }
    if (x > 709.79) {
        return {max_double, inf};
    }
    if (x < -745.2) {
        return {0.0, std::numeric_limits<double>::denorm_min()};
    }
    return outward_scaled(exp_scaled(x), exp_rel_err);
}

namespace
{

// sinh(x) = sum x^(2j+1)/(2j+1)!, |x| < 1, degree 35 (remainder < 1e-40).
dd sinh_taylor(double x) noexcept
{
    const dd x2 = detail::two_prod(x, x);
    dd p{1.0, 0.0};
    for (int j = 17; j >= 1; --j) {
        p = dd{1.0, 0.0} + (p * x2) / static_cast<double>((2 * j) * (2 * j + 1));
    }
    return p * x;
}

dd cosh_taylor(double x) noexcept
{
    const dd x2 = detail::two_prod(x, x);
    dd p{1.0, 0.0};
    for (int j = 17; j >= 1; --j) {
        p = dd{1.0, 0.0} + (p * x2) / static_cast<double>((2 * j - 1) * (2 * j));
    }
    return p;
}

} // namespace

std::pair<double, double> sinh_bounds(double x) noexcept
{
    if (x == 0.0) {
        return {0.0, 0.0};
    }
    const double ax = std::fabs(x);
    std::pair<double, double> b;
    if (ax < 1.0) {
        b = outward(sinh_taylor(ax), hyp_rel_err);
    } else if (ax < 700.0) {
        const scaled_dd e = exp_scaled(ax);
        const dd big = detail::ldexp(e.m, e.e);
        const dd v = (big - dd{1.0, 0.0} / big) * 0.5;
        b = outward(v, hyp_rel_err);
    } else {
        // e^-2|x| is far below the error budget.
        scaled_dd e = exp_scaled(ax);
        e.e -= 1;
        b = outward_scaled(e, hyp_rel_err);
    }
    if (x < 0) {
        return {-b.second, -b.first};
    }
    return b;
}

std::pair<double, double> cosh_bounds(double x) noexcept
{
    const double ax = std::fabs(x);
    if (ax == 0.0) {
        return {1.0, 1.0};
    }
    if (ax < 1.0) {
        return outward(cosh_taylor(ax), hyp_rel_err);
    }
    if (ax < 700.0) {
        const scaled_dd e = exp_scaled(ax);
        const dd big = detail::ldexp(e.m, e.e);
        return outward((big + dd{1.0, 0.0} / big) * 0.5, hyp_rel_err);
    }
    scaled_dd e = exp_scaled(ax);
    e.e -= 1;
    return outward_scaled(e, hyp_rel_err);
}

std::pair<double, double> tanh_bounds(double x) noexcept
{
    if (x == 0.0) {
        return {0.0, 0.0};
    }
    const double ax = std::fabs(x);
    std::pair<double, double> b;
    if (ax < 1.0) {
        b = outward(sinh_taylor(ax) / cosh_taylor(ax), hyp_rel_err);
    } else if (ax < 350.0) {
        const scaled_dd e = exp_scaled(-2.0 * ax);
        const dd small = detail::ldexp(e.m, e.e);
        b = outward((dd{1.0, 0.0} - small) / (dd{1.0, 0.0} + small), hyp_rel_err);
    } else {
        b = {next_down(1.0), 1.0};
    }
    // tanh < 1 strictly.
    b.second = std::min(b.second, 1.0);
    if (x < 0) {
        return {-b.second, -b.first};
    }
    return b;
}

} // namespace rounding

using namespace rounding;

Interval::Interval(double x) : Interval(x, x) {}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (std::isnan(lo) || std::isnan(hi)) {
        throw std::invalid_argument("Interval: NaN bound");
    }
    if (lo > hi) {
        throw std::invalid_argument("Interval: lower bound exceeds upper bound");
    }
}

double Interval::mid() const noexcept
{
    if (lo_ == -hi_) {
        return 0.0;
    }
    if (std::isinf(lo_) || std::isinf(hi_)) {
        return std::isinf(lo_) ? (std::isinf(hi_) ? 0.0 : -max_double) : max_double;
    }
    const double m = 0.5 * lo_ + 0.5 * hi_;
    return std::clamp(m, lo_, hi_);
}

double Interval::rad() const noexcept
{
    const double m = mid();
    return std::max(add_up(m, -lo_), add_up(hi_, -m));
}

double Interval::width() const noexcept
{
    return add_up(hi_, -lo_);
}

double Interval::mag() const noexcept
{
    return std::max(std::fabs(lo_), std::fabs(hi_));
}

double Interval::mig() const noexcept
{
    if (contains_zero()) {
        return 0.0;
    }
    return std::min(std::fabs(lo_), std::fabs(hi_));
}

bool Interval::is_finite() const noexcept
{
    return std::isfinite(lo_) && std::isfinite(hi_);
}

Interval &Interval::operator+=(const Interval &o)
{
    return *this = *this + o;
}

Interval &Interval::operator-=(const Interval &o)
{
    return *this = *this - o;
}

Interval &Interval::operator*=(const Interval &o)
{
    return *this = *this * o;
}

Interval &Interval::operator/=(const Interval &o)
{
    return *this = *this / o;
}

Interval operator-(const Interval &a)
{
    return {-a.hi(), -a.lo()};
}

Interval operator+(const Interval &a, const Interval &b)
{
    return {add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi())};
}

Interval operator-(const Interval &a, const Interval &b)
{
    return {add_down(a.lo(), -b.hi()), add_up(a.hi(), -b.lo())};
}

Interval operator*(const Interval &a, const Interval &b)
{
    const double al = a.lo();
    const double ah = a.hi();
    const double bl = b.lo();
    const double bh = b.hi();
    const double lo = std::min({mul_down(al, bl), mul_down(al, bh), mul_down(ah, bl), mul_down(ah, bh)});
    const double hi = std::max({mul_up(al, bl), mul_up(al, bh), mul_up(ah, bl), mul_up(ah, bh)});
    return {lo, hi};
}

Interval operator/(const Interval &a, const Interval &b)
{
    if (b.contains_zero()) {
        throw std::domain_error("Interval division by an interval containing zero");
    }
    const double al = a.lo();
    const double ah = a.hi();
    const double bl = b.lo();
    const double bh = b.hi();
    const double lo = std::min({div_down(al, bl), div_down(al, bh), div_down(ah, bl), div_down(ah, bh)});
    const double hi = std::max({div_up(al, bl), div_up(al, bh), div_up(ah, bl), div_up(ah, bh)});
    return {lo, hi};
}

Interval abs(const Interval &a)
{
    if (a.lo() >= 0) {
        return a;
    }
    if (a.hi() <= 0) {
        return -a;
    }
    return {0.0, a.mag()};
}

Interval sqr(const Interval &a)
{
    const Interval m = abs(a);
    return {mul_down(m.lo(), m.lo()), mul_up(m.hi(), m.hi())};
}

Interval pown(const Interval &a, int n)
{
    if (n < 0) {
        return Interval(1.0) / pown(a, -n);
    }
    if (n == 0) {
        return Interval(1.0);
    }
    if (n % 2 == 0) {
        return pown(sqr(a), n / 2);
    }
    // Odd powers are monotone: bound each endpoint separately.
    const auto point = [n](double x) {
        const Interval base(x);
        return base * pown(sqr(base), n / 2);
    };
    return {point(a.lo()).lo(), point(a.hi()).hi()};
}

Interval sqrt(const Interval &a)
{
    if (a.lo() < 0) {
        throw std::domain_error("Interval sqrt of an interval with negative lower bound");
    }
    return {sqrt_down(a.lo()), sqrt_up(a.hi())};
}

Interval exp(const Interval &a)
{
    return {exp_bounds(a.lo()).first, exp_bounds(a.hi()).second};
}

Interval sinh(const Interval &a)
{
    return {sinh_bounds(a.lo()).first, sinh_bounds(a.hi()).second};
}

Interval cosh(const Interval &a)
{
    if (a.contains_zero()) {
        return {1.0, std::max(cosh_bounds(a.lo()).second, cosh_bounds(a.hi()).second)};
    }
    const double near = a.lo() > 0 ? a.lo() : a.hi();
    const double far = a.lo() > 0 ? a.hi() : a.lo();
    return {cosh_bounds(near).first, cosh_bounds(far).second};
}

Interval tanh(const Interval &a)
{
    return {tanh_bounds(a.lo()).first, tanh_bounds(a.hi()).second};
}

Interval hull(const Interval &a, const Interval &b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval intersect(const Interval &a, const Interval &b)
{
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    if (lo > hi) {
        throw std::domain_error("Interval intersection is empty");
    }
    return {lo, hi};
}

Interval inflate(const Interval &a, double factor)
{
    const double m = a.mid();
    const double r = mul_up(a.rad(), factor);
    return {add_down(m, -r), add_up(m, r)};
}

std::pair<Interval, Interval> bisect(const Interval &a, DegenerateBisect mode)
{
    if (a.is_point()) {
        if (mode == DegenerateBisect::identity) {
            return {a, a};
        }
        throw std::invalid_argument("bisect: point interval");
    }
    const double m = a.mid();
    return {Interval(a.lo(), m), Interval(m, a.hi())};
}

std::ostream &operator<<(std::ostream &os, const Interval &a)
{
    const auto prec = os.precision(17);
    os << '[' << a.lo() << ", " << a.hi() << ']';
    os.precision(prec);
    return os;
}

Interval pi_interval()
{
    // 0x1.921fb54442d18p+1 is the double nearest to pi and lies below it.
    constexpr double pi_lo = 0x1.921fb54442d18p+1;
    return {pi_lo, next_up(pi_lo)};
}

} // namespace stokes
