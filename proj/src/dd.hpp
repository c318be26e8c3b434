#ifndef STOKES_SRC_DD_HPP
#define STOKES_SRC_DD_HPP

// Double-double arithmetic used internally to evaluate elementary functions
// to ~100 bits before rounding outward to binary64. Only the handful of
// operations needed by interval.cpp are provided.

#include <cmath>

namespace stokes::detail
{

struct dd {
    double hi;
    double lo;
};

inline dd two_sum(double a, double b) noexcept
{
    const double s = a + b;
    const double bb = s - a;
    const double e = (a - (s - bb)) + (b - bb);
    return {s, e};
}

inline dd quick_two_sum(double a, double b) noexcept
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) noexcept
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) noexcept
{
    dd s = two_sum(a.hi, b.hi);
    const dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) noexcept
{
    return {-a.hi, -a.lo};
}

inline dd operator-(dd a, dd b) noexcept
{
    return a + (-b);
}

inline dd operator*(dd a, dd b) noexcept
{
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator*(dd a, double b) noexcept
{
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) noexcept
{
    const double q1 = a.hi / b.hi;
    dd r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd{q3, 0.0};
}

inline dd operator/(dd a, double b) noexcept
{
    return a / dd{b, 0.0};
}

inline dd ldexp(dd a, int e) noexcept
{
    return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)};
}

} // namespace stokes::detail

#endif
