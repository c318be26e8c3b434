#ifndef STOKES_INTERVAL_HPP
#define STOKES_INTERVAL_HPP

#include <iosfwd>
#include <utility>

namespace stokes
{

// Closed interval [lo, hi] of binary64 numbers with containment semantics:
// every operation returns an interval containing the exact real image of its
// arguments. Outward rounding is emulated under the default round-to-nearest
// mode with error-free transformations, so no floating-point environment
// state is ever touched and values can be shared freely between threads.
//
// Infinite bounds only appear as an overflow signal. NaN is rejected at
// construction.
class Interval
{
public:
    constexpr Interval() noexcept = default;
    // NOLINTNEXTLINE(google-explicit-constructor)
    Interval(double x);
    Interval(double lo, double hi);

    [[nodiscard]] double lo() const noexcept { return lo_; }
    [[nodiscard]] double hi() const noexcept { return hi_; }

    // Midpoint rounded to nearest; always inside the interval.
    [[nodiscard]] double mid() const noexcept;
    // Upper bound on the radius, so that [mid - rad, mid + rad] covers *this.
    [[nodiscard]] double rad() const noexcept;
    [[nodiscard]] double width() const noexcept;
    // max |x| and min |x| over the interval.
    [[nodiscard]] double mag() const noexcept;
    [[nodiscard]] double mig() const noexcept;

    [[nodiscard]] bool is_point() const noexcept { return lo_ == hi_; }
    [[nodiscard]] bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains(const Interval &o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    [[nodiscard]] bool interior_contains(const Interval &o) const noexcept { return lo_ < o.lo_ && o.hi_ < hi_; }
    [[nodiscard]] bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
    [[nodiscard]] bool is_negative() const noexcept { return hi_ < 0.0; }
    [[nodiscard]] bool is_positive() const noexcept { return lo_ > 0.0; }
    [[nodiscard]] bool is_finite() const noexcept;

    Interval &operator+=(const Interval &o);
    Interval &operator-=(const Interval &o);
    Interval &operator*=(const Interval &o);
    Interval &operator/=(const Interval &o);

    friend bool operator==(const Interval &, const Interval &) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval operator-(const Interval &a);
Interval operator+(const Interval &a, const Interval &b);
Interval operator-(const Interval &a, const Interval &b);
Interval operator*(const Interval &a, const Interval &b);
// Throws std::domain_error when b contains zero.
Interval operator/(const Interval &a, const Interval &b);

Interval abs(const Interval &a);
Interval sqr(const Interval &a);
Interval pown(const Interval &a, int n);
// Throws std::domain_error when a.lo() < 0.
Interval sqrt(const Interval &a);
Interval exp(const Interval &a);
Interval sinh(const Interval &a);
Interval cosh(const Interval &a);
Interval tanh(const Interval &a);

// Smallest interval containing both arguments.
Interval hull(const Interval &a, const Interval &b);
// Intersection; throws std::domain_error when empty.
Interval intersect(const Interval &a, const Interval &b);
// Midpoint +- factor * radius, rounded outward.
Interval inflate(const Interval &a, double factor);

enum class DegenerateBisect { error, identity };

// Splits at the midpoint. A point interval either throws
// std::invalid_argument or yields (a, a), depending on the flag.
std::pair<Interval, Interval> bisect(const Interval &a, DegenerateBisect mode = DegenerateBisect::error);

std::ostream &operator<<(std::ostream &os, const Interval &a);

// Enclosures of constants.
Interval pi_interval();

namespace rounding
{

// Neighbouring doubles.
double next_up(double x) noexcept;
double next_down(double x) noexcept;

// Correctly directed results of the basic operations.
double add_down(double a, double b) noexcept;
double add_up(double a, double b) noexcept;
double mul_down(double a, double b) noexcept;
double mul_up(double a, double b) noexcept;
double div_down(double a, double b) noexcept;
double div_up(double a, double b) noexcept;
double sqrt_down(double a) noexcept;
double sqrt_up(double a) noexcept;

// Rigorous bounds of exp/sinh/cosh/tanh at a double argument, at most one
// ulp away from the exact value on each side.
std::pair<double, double> exp_bounds(double x) noexcept;
std::pair<double, double> sinh_bounds(double x) noexcept;
std::pair<double, double> cosh_bounds(double x) noexcept;
std::pair<double, double> tanh_bounds(double x) noexcept;

} // namespace rounding

} // namespace stokes

#endif
