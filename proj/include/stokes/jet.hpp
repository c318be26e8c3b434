#ifndef STOKES_JET_HPP
#define STOKES_JET_HPP

#include <stokes/interval.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

namespace stokes
{

// Truncated Taylor expansion at a base point (or base interval) stored as
// derivative values: coefficient k is f^(k), not f^(k)/k!.
//
// T is any real scalar with the usual arithmetic and ADL-visible exp, sqrt,
// sinh, cosh, tanh (double, Interval, multiprecision types). When T is
// Interval and the base point is a non-degenerate interval, every coefficient
// encloses the corresponding derivative over the whole base interval.
template <class T>
class Jet
{
public:
    static constexpr int max_order = 8;

    Jet() = default;
    Jet(const T &value, int order) : order_(check_order(order))
    {
        d_.fill(T(0.0));
        d_[0] = value;
    }

    static Jet constant(const T &value, int order) { return Jet(value, order); }
    static Jet variable(const T &x, int order)
    {
        Jet j(x, order);
        if (order >= 1) {
            j.d_[1] = T(1.0);
        }
        return j;
    }

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] const T &value() const noexcept { return d_[0]; }
    const T &operator[](int k) const { return d_.at(static_cast<std::size_t>(k)); }
    T &operator[](int k) { return d_.at(static_cast<std::size_t>(k)); }

    static int check_order(int order)
    {
        if (order < 0 || order > max_order) {
            throw std::invalid_argument("Jet order must lie in [0, 8]");
        }
        return order;
    }

private:
    int order_ = 0;
    std::array<T, max_order + 1> d_{};
};

namespace detail
{

// Binomial coefficients up to 8, exact in binary64.
inline constexpr std::array<std::array<double, 9>, 9> binom = [] {
    std::array<std::array<double, 9>, 9> c{};
    for (int n = 0; n <= 8; ++n) {
        c[n][0] = 1.0;
        for (int k = 1; k <= n; ++k) {
            c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0.0);
        }
    }
    return c;
}();

template <class T>
int common_order(const Jet<T> &a, const Jet<T> &b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("Jet orders differ");
    }
    return a.order();
}

} // namespace detail

inline Jet<Interval> jet_lift(const Interval &x, int order)
{
    return Jet<Interval>::constant(x, order);
}

inline Jet<Interval> jet_var(const Interval &x, int order)
{
    return Jet<Interval>::variable(x, order);
}

template <class T>
Jet<T> operator-(const Jet<T> &a)
{
    Jet<T> r(T(0.0), a.order());
    for (int k = 0; k <= a.order(); ++k) {
        r[k] = -a[k];
    }
    return r;
}

template <class T>
Jet<T> operator+(const Jet<T> &a, const Jet<T> &b)
{
    const int n = detail::common_order(a, b);
    Jet<T> r(T(0.0), n);
    for (int k = 0; k <= n; ++k) {
        r[k] = a[k] + b[k];
    }
    return r;
}

template <class T>
Jet<T> operator-(const Jet<T> &a, const Jet<T> &b)
{
    const int n = detail::common_order(a, b);
    Jet<T> r(T(0.0), n);
    for (int k = 0; k <= n; ++k) {
        r[k] = a[k] - b[k];
    }
    return r;
}

template <class T>
Jet<T> operator*(const Jet<T> &a, const Jet<T> &b)
{
    const int n = detail::common_order(a, b);
    Jet<T> r(T(0.0), n);
    for (int k = 0; k <= n; ++k) {
        T s = a[0] * b[k];
        for (int i = 1; i <= k; ++i) {
            s = s + (a[i] * b[k - i]) * T(detail::binom[k][i]);
        }
        r[k] = s;
    }
    return r;
}

template <class T>
Jet<T> operator/(const Jet<T> &a, const Jet<T> &b)
{
    const int n = detail::common_order(a, b);
    Jet<T> r(T(0.0), n);
    for (int k = 0; k <= n; ++k) {
        T s = a[k];
        for (int i = 0; i < k; ++i) {
            s = s - (r[i] * b[k - i]) * T(detail::binom[k][i]);
        }
        r[k] = s / b[0];
    }
    return r;
}

template <class T>
Jet<T> operator+(const Jet<T> &a, const T &c)
{
    Jet<T> r = a;
    r[0] = r[0] + c;
    return r;
}

template <class T>
Jet<T> operator+(const T &c, const Jet<T> &a)
{
    return a + c;
}

template <class T>
Jet<T> operator-(const Jet<T> &a, const T &c)
{
    Jet<T> r = a;
    r[0] = r[0] - c;
    return r;
}

template <class T>
Jet<T> operator-(const T &c, const Jet<T> &a)
{
    return -a + c;
}

template <class T>
Jet<T> operator*(const Jet<T> &a, const T &c)
{
    Jet<T> r = a;
    for (int k = 0; k <= a.order(); ++k) {
        r[k] = r[k] * c;
    }
    return r;
}

template <class T>
Jet<T> operator*(const T &c, const Jet<T> &a)
{
    return a * c;
}

template <class T>
Jet<T> operator/(const Jet<T> &a, const T &c)
{
    Jet<T> r = a;
    for (int k = 0; k <= a.order(); ++k) {
        r[k] = r[k] / c;
    }
    return r;
}

template <class T>
Jet<T> operator/(const T &c, const Jet<T> &a)
{
    return Jet<T>(c, a.order()) / a;
}

template <class T>
Jet<T> exp(const Jet<T> &a)
{
    using std::exp;
    Jet<T> r(exp(a[0]), a.order());
    for (int k = 1; k <= a.order(); ++k) {
        T s = r[0] * a[k];
        for (int i = 1; i < k; ++i) {
            s = s + (r[i] * a[k - i]) * T(detail::binom[k - 1][i]);
        }
        r[k] = s;
    }
    return r;
}

// Requires a[0] > 0 for orders >= 1.
template <class T>
Jet<T> sqrt(const Jet<T> &a)
{
    using std::sqrt;
    Jet<T> r(sqrt(a[0]), a.order());
    if (a.order() == 0) {
        return r;
    }
    const T two_h0 = r[0] * T(2.0);
    for (int k = 1; k <= a.order(); ++k) {
        T s = a[k];
        for (int i = 1; i < k; ++i) {
            s = s - (r[i] * r[k - i]) * T(detail::binom[k][i]);
        }
        r[k] = s / two_h0;
    }
    return r;
}

namespace detail
{

// Joint recurrence for s = sinh(f), c = cosh(f).
template <class T>
void sinh_cosh(const Jet<T> &a, Jet<T> &s, Jet<T> &c)
{
    using std::cosh;
    using std::sinh;
    s = Jet<T>(sinh(a[0]), a.order());
    c = Jet<T>(cosh(a[0]), a.order());
    for (int k = 1; k <= a.order(); ++k) {
        T ss = c[0] * a[k];
        T cc = s[0] * a[k];
        for (int i = 1; i < k; ++i) {
            const T b(binom[k - 1][i]);
            ss = ss + (c[i] * a[k - i]) * b;
            cc = cc + (s[i] * a[k - i]) * b;
        }
        s[k] = ss;
        c[k] = cc;
    }
}

} // namespace detail

template <class T>
Jet<T> sinh(const Jet<T> &a)
{
    Jet<T> s;
    Jet<T> c;
    detail::sinh_cosh(a, s, c);
    return s;
}

template <class T>
Jet<T> cosh(const Jet<T> &a)
{
    Jet<T> s;
    Jet<T> c;
    detail::sinh_cosh(a, s, c);
    return c;
}

// t' = (1 - t^2) f'
template <class T>
Jet<T> tanh(const Jet<T> &a)
{
    using std::tanh;
    const int n = a.order();
    Jet<T> t(tanh(a[0]), n);
    Jet<T> u(T(1.0) - t[0] * t[0], n);
    for (int k = 1; k <= n; ++k) {
        T s = u[0] * a[k];
        for (int i = 1; i < k; ++i) {
            s = s + (u[i] * a[k - i]) * T(detail::binom[k - 1][i]);
        }
        t[k] = s;
        T q = t[0] * t[k] * T(2.0);
        for (int i = 1; i < k; ++i) {
            q = q + (t[i] * t[k - i]) * T(detail::binom[k][i]);
        }
        u[k] = -q;
    }
    return t;
}

} // namespace stokes

#endif
