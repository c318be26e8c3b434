#ifndef STOKES_CERTIFY_HPP
#define STOKES_CERTIFY_HPP

#include <stokes/interval.hpp>
#include <stokes/jet.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace stokes
{

// gamma_top(k) = sum_{m=0}^{10} mult_m * (p0 + p1 k + p2 k^2 + p3 k^3) * e^{2 m k}.
// Held as data so the sabotage tests can flip single coefficients.
struct GammaTopTerm {
    std::int64_t mult;
    std::array<std::int64_t, 4> poly;  // ascending in k
};

struct GammaTopTable {
    std::array<GammaTopTerm, 11> terms;  // index m

    static const GammaTopTable &standard();
};

// Jet of gamma_top at kappa (point or interval) up to the given order (<= 8).
Jet<Interval> gamma_top(const Interval &kappa, int order, const GammaTopTable &tab = GammaTopTable::standard());
double gamma_top(double kappa, const GammaTopTable &tab = GammaTopTable::standard());

// gamma_top^(j)(0) in exact integer arithmetic, j = 0..8.
std::int64_t gamma_top_derivative_at_zero(int j, const GammaTopTable &tab = GammaTopTable::standard());

enum class Quantity { gamma_top, gamma_top_d1, gamma_top_d7, d2_gamma };
enum class Verdict { negative, positive, indeterminate };

const char *to_string(Quantity q);
const char *to_string(Verdict v);
Verdict verdict_of(const Interval &enclosure);

struct SignRecord {
    Interval interval;  // kappa range
    Quantity quantity = Quantity::gamma_top;
    Interval enclosure;
    Verdict verdict = Verdict::indeterminate;
    Verdict expected = Verdict::indeterminate;
    int depth = 0;
};

// Enclosure of the quantity over a kappa interval. gamma_top and its
// derivatives use a Taylor form intersected with the direct jet enclosure.
Interval quantity_enclosure(Quantity q, const Interval &kappa, const GammaTopTable &tab = GammaTopTable::standard());

struct AdaptiveOptions {
    int max_depth = 40;
    const GammaTopTable *table = nullptr;  // nullptr: standard
};

// Bisects until each piece has the target sign or max_depth is reached.
// Records come back sorted by lower bound. The serial version recurses,
// the default one processes each bisection level in parallel.
std::vector<SignRecord> certify_sign_adaptive_serial(Quantity q, const Interval &domain, Verdict target,
                                                     const AdaptiveOptions &opt = {});
std::vector<SignRecord> certify_sign_adaptive(Quantity q, const Interval &domain, Verdict target,
                                              const AdaptiveOptions &opt = {});

// Bisects a record; children are intersected with the parent enclosure.
std::array<SignRecord, 2> refine(const SignRecord &rec, const GammaTopTable &tab = GammaTopTable::standard());

struct TailBound {
    bool holds = false;
    Interval lhs;  // 27 e^16
    double rhs = 0.0;  // 64 (23 + 7/4)
    double ratio_lower = 0.0;
};

TailBound certify_tail_bound();

struct ExactVanishing {
    bool holds = false;
    std::array<std::int64_t, 9> derivatives{};  // gamma_top^(j)(0), j = 0..8
};

ExactVanishing certify_exact_vanishing(const GammaTopTable &tab = GammaTopTable::standard());

struct D7Result {
    bool holds = false;
    ExactVanishing vanishing;
    std::vector<SignRecord> records;  // tiling of [0, 0.15]
};

D7Result certify_d7_taylor(const AdaptiveOptions &opt = {});

// Enclosure of d^2_ell Gamma(., 0) over kappa; bisects when the direct
// evaluation is indeterminate and returns the hull of the pieces.
SignRecord certify_d2_gamma(const Interval &kappa, int max_depth = 12);

// Tightest interval with binary64 bounds enclosing the decimal range [a, b].
Interval decimal_interval(const std::string &a, const std::string &b);

// midpoint +- 1.1 radius
Interval inflate10(const Interval &x);

struct NamedCheck {
    std::string name;
    Interval interval;
    Interval enclosure;
    Interval reference;  // enclosure must lie inside
    bool holds = false;
};

struct CertifyOptions {
    Interval domain = Interval(0.0, 2.0);
    int max_depth = 40;
    bool parallel = true;
    GammaTopTable table = GammaTopTable::standard();
};

struct Certificate {
    std::string version = "1";
    std::string grid_strategy = "adaptive bisection, Taylor form with direct jet intersection";
    int max_depth = 40;
    Interval domain;
    std::vector<SignRecord> records;
    Interval excluded_zone;
    bool tail_bound_checked = false;
    TailBound tail;
    ExactVanishing vanishing;
    std::vector<NamedCheck> checks;
    Interval d2_enclosure;
    bool verified = false;
    std::vector<std::string> failures;

    [[nodiscard]] std::size_t leaf_count(Quantity q) const;
};

// The excluded zone I* = [0.380337, 0.380338], outward-rounded.
Interval excluded_zone();

Certificate run_full_certificate(const CertifyOptions &opt = {});

// Structural soundness: determinate records with the expected sign whose
// kappa ranges cover the domain minus the excluded zone.
bool records_tile(const Certificate &c, std::string *why = nullptr);

// Versioned JSON text, shortest round-trip decimals for every bound.
std::string to_json(const Certificate &c);

} // namespace stokes

#endif
