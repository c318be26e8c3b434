#include <stokes/certify.hpp>

#include <stokes/index.hpp>
#include <stokes/io.hpp>
#include <stokes/parallel.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace stokes
{

const GammaTopTable &GammaTopTable::standard()
{
    static const GammaTopTable tab{{{
        {1, {5, 6, 0, 0}},          // m = 0
        {8, {1, -2, 0, 4}},         // m = 1
        {1, {-23, 2, 48, 32}},      // m = 2
        {16, {-1, 15, 8, 20}},      // m = 3
        {4, {11, -2, 116, 232}},    // m = 4
        {-64, {0, 7, 0, 23}},       // m = 5
        {4, {-11, -2, -116, 232}},  // m = 6
        {16, {1, 15, -8, 20}},      // m = 7
        {1, {23, 2, -48, 32}},      // m = 8
        {8, {-1, -2, 0, 4}},        // m = 9
        {1, {-5, 6, 0, 0}},         // m = 10
    }}};
    return tab;
}

namespace
{

// i-th derivative of the cubic p at x.
template <class T>
T poly_derivative(const std::array<std::int64_t, 4> &p, int i, const T &x)
{
    T acc(0.0);
    for (int n = 3; n >= i; --n) {
        double f = static_cast<double>(p[static_cast<std::size_t>(n)]);
        for (int q = n; q > n - i; --q) {
            f *= q;
        }
        acc = acc * x + T(f);
    }
    return acc;
}

} // namespace

Jet<Interval> gamma_top(const Interval &kappa, int order, const GammaTopTable &tab)
{
    Jet<Interval> out(Interval(0.0), order);
    for (int m = 0; m <= 10; ++m) {
        const GammaTopTerm &t = tab.terms[static_cast<std::size_t>(m)];
        const Interval e = exp(Interval(2.0 * m) * kappa);
        std::array<Interval, 4> pd;
        for (int i = 0; i <= 3; ++i) {
            pd[static_cast<std::size_t>(i)] = poly_derivative(t.poly, i, kappa);
        }
        for (int j = 0; j <= order; ++j) {
            // (P e^{2mk})^(j) = sum_i C(j,i) P^(i) (2m)^(j-i) e^{2mk}
            Interval s(0.0);
            for (int i = 0; i <= std::min(j, 3); ++i) {
                const double w = detail::binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                                 * std::pow(2.0 * m, j - i);
                s += Interval(w) * pd[static_cast<std::size_t>(i)];
            }
            out[j] += Interval(static_cast<double>(t.mult)) * s * e;
        }
    }
    return out;
}

double gamma_top(double kappa, const GammaTopTable &tab)
{
    double s = 0.0;
    for (int m = 0; m <= 10; ++m) {
        const GammaTopTerm &t = tab.terms[static_cast<std::size_t>(m)];
        s += static_cast<double>(t.mult) * poly_derivative(t.poly, 0, kappa) * std::exp(2.0 * m * kappa);
    }
    return s;
}

std::int64_t gamma_top_derivative_at_zero(int j, const GammaTopTable &tab)
{
    if (j < 0 || j > 8) {
        throw std::invalid_argument("gamma_top_derivative_at_zero: j must lie in [0, 8]");
    }
    std::int64_t total = 0;
    for (int m = 0; m <= 10; ++m) {
        const GammaTopTerm &t = tab.terms[static_cast<std::size_t>(m)];
        std::int64_t term = 0;
        for (int i = 0; i <= std::min(j, 3); ++i) {
            // C(j,i) * i! * p_i * (2m)^(j-i)
            std::int64_t c = static_cast<std::int64_t>(detail::binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
            for (int q = 2; q <= i; ++q) {
                c *= q;
            }
            c *= t.poly[static_cast<std::size_t>(i)];
            for (int q = 0; q < j - i; ++q) {
                c *= 2 * m;
            }
            term += c;
        }
        total += t.mult * term;
    }
    return total;
}

const char *to_string(Quantity q)
{
    switch (q) {
    case Quantity::gamma_top:
        return "gamma_top";
    case Quantity::gamma_top_d1:
        return "gamma_top_d1";
    case Quantity::gamma_top_d7:
        return "gamma_top_d7";
    case Quantity::d2_gamma:
        return "d2_gamma";
    }
    return "unknown";
}

const char *to_string(Verdict v)
{
    switch (v) {
    case Verdict::negative:
        return "negative";
    case Verdict::positive:
        return "positive";
    case Verdict::indeterminate:
        return "indeterminate";
    }
    return "unknown";
}

Verdict verdict_of(const Interval &enclosure)
{
    if (enclosure.is_negative()) {
        return Verdict::negative;
    }
    if (enclosure.is_positive()) {
        return Verdict::positive;
    }
    return Verdict::indeterminate;
}

namespace
{

const Interval whole_line(-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());

int derivative_index(Quantity q)
{
    switch (q) {
    case Quantity::gamma_top:
        return 0;
    case Quantity::gamma_top_d1:
        return 1;
    case Quantity::gamma_top_d7:
        return 7;
    case Quantity::d2_gamma:
        break;
    }
    return -1;
}

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

Interval gamma_top_taylor_form(int d, const Interval &x, const GammaTopTable &tab)
{
    const int r = std::min(d + 4, Jet<Interval>::max_order);
    const Jet<Interval> over = gamma_top(x, r, tab);
    if (x.is_point()) {
        return over[d];
    }
    const double c = x.mid();
    const Jet<Interval> at = gamma_top(Interval(c), r - 1, tab);
    const Interval h = x - Interval(c);
    Interval t(0.0);
    for (int i = 0; i + d < r; ++i) {
        t += at[d + i] * pown(h, i) / Interval(factorial(i));
    }
    t += over[r] * pown(h, r - d) / Interval(factorial(r - d));
    if (t.hi() < over[d].lo() || over[d].hi() < t.lo()) {
        throw std::logic_error("gamma_top: Taylor form and direct enclosure are disjoint");
    }
    return intersect(t, over[d]);
}

} // namespace

Interval quantity_enclosure(Quantity q, const Interval &kappa, const GammaTopTable &tab)
{
    if (q == Quantity::d2_gamma) {
        try {
            return gamma_second_derivative(kappa).value;
        } catch (const std::exception &) {
            return whole_line;
        }
    }
    return gamma_top_taylor_form(derivative_index(q), kappa, tab);
}

namespace
{

const GammaTopTable &table_of(const AdaptiveOptions &opt)
{
    return opt.table != nullptr ? *opt.table : GammaTopTable::standard();
}

SignRecord make_record(Quantity q, const Interval &x, const Interval &enc, Verdict target, int depth)
{
    SignRecord r;
    r.interval = x;
    r.quantity = q;
    r.enclosure = enc;
    r.verdict = verdict_of(enc);
    r.expected = target;
    r.depth = depth;
    return r;
}

// A piece is final once its sign is decided (either way) or depth runs out.
bool is_final(Verdict v, int depth, int max_depth)
{
    return v != Verdict::indeterminate || depth >= max_depth;
}

bool splittable(const Interval &x)
{
    const double m = x.mid();
    return m > x.lo() && m < x.hi();
}

void adaptive_rec(Quantity q, const Interval &x, Verdict target, int depth, const AdaptiveOptions &opt,
                  std::vector<SignRecord> &out)
{
    const Interval enc = quantity_enclosure(q, x, table_of(opt));
    const Verdict v = verdict_of(enc);
    if (is_final(v, depth, opt.max_depth) || !splittable(x)) {
        out.push_back(make_record(q, x, enc, target, depth));
        return;
    }
    const auto [a, b] = bisect(x);
    adaptive_rec(q, a, target, depth + 1, opt, out);
    adaptive_rec(q, b, target, depth + 1, opt, out);
}

void sort_records(std::vector<SignRecord> &v)
{
    std::sort(v.begin(), v.end(), [](const SignRecord &a, const SignRecord &b) {
        return a.interval.lo() < b.interval.lo();
    });
}

} // namespace

std::vector<SignRecord> certify_sign_adaptive_serial(Quantity q, const Interval &domain, Verdict target,
                                                     const AdaptiveOptions &opt)
{
    std::vector<SignRecord> out;
    adaptive_rec(q, domain, target, 0, opt, out);
    sort_records(out);
    return out;
}

std::vector<SignRecord> certify_sign_adaptive(Quantity q, const Interval &domain, Verdict target,
                                              const AdaptiveOptions &opt)
{
    std::vector<SignRecord> out;
    std::vector<Interval> frontier{domain};
    const GammaTopTable &tab = table_of(opt);
    for (int depth = 0; !frontier.empty(); ++depth) {
        const auto n = static_cast<std::int64_t>(frontier.size());
        std::vector<Interval> enc(frontier.size());
        std::vector<char> failed(frontier.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                enc[static_cast<std::size_t>(i)] = quantity_enclosure(q, frontier[static_cast<std::size_t>(i)], tab);
            } catch (...) {
                failed[static_cast<std::size_t>(i)] = 1;
            }
        }
        std::vector<Interval> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            if (failed[i] != 0) {
                // Surface the error on the calling thread.
                enc[i] = quantity_enclosure(q, frontier[i], tab);
            }
            const Verdict v = verdict_of(enc[i]);
            if (is_final(v, depth, opt.max_depth) || !splittable(frontier[i])) {
                out.push_back(make_record(q, frontier[i], enc[i], target, depth));
                continue;
            }
            const auto [a, b] = bisect(frontier[i]);
            next.push_back(a);
            next.push_back(b);
        }
        frontier = std::move(next);
    }
    sort_records(out);
    return out;
}

std::array<SignRecord, 2> refine(const SignRecord &rec, const GammaTopTable &tab)
{
    const auto [a, b] = bisect(rec.interval);
    std::array<SignRecord, 2> out;
    const std::array<Interval, 2> parts{a, b};
    for (std::size_t i = 0; i < 2; ++i) {
        const Interval e = quantity_enclosure(rec.quantity, parts[i], tab);
        const Interval tight = (e.hi() < rec.enclosure.lo() || rec.enclosure.hi() < e.lo())
                                   ? rec.enclosure
                                   : intersect(e, rec.enclosure);
        out[i] = make_record(rec.quantity, parts[i], tight, rec.expected, rec.depth + 1);
    }
    return out;
}

TailBound certify_tail_bound()
{
    TailBound t;
    t.lhs = Interval(27.0) * exp(Interval(16.0));
    t.rhs = 64.0 * (23.0 + 7.0 / 4.0);
    t.holds = t.lhs.lo() > t.rhs;
    t.ratio_lower = (t.lhs / Interval(t.rhs)).lo();
    return t;
}

ExactVanishing certify_exact_vanishing(const GammaTopTable &tab)
{
    ExactVanishing v;
    v.holds = true;
    for (int j = 0; j <= 8; ++j) {
        v.derivatives[static_cast<std::size_t>(j)] = gamma_top_derivative_at_zero(j, tab);
        if (j <= 6 && v.derivatives[static_cast<std::size_t>(j)] != 0) {
            v.holds = false;
        }
    }
    return v;
}

D7Result certify_d7_taylor(const AdaptiveOptions &opt)
{
    D7Result r;
    r.vanishing = certify_exact_vanishing(table_of(opt));
    r.records = certify_sign_adaptive(Quantity::gamma_top_d7, decimal_interval("0", "0.15"), Verdict::negative, opt);
    r.holds = r.vanishing.holds && std::all_of(r.records.begin(), r.records.end(), [](const SignRecord &s) {
                  return s.verdict == Verdict::negative;
              });
    return r;
}

SignRecord certify_d2_gamma(const Interval &kappa, int max_depth)
{
    AdaptiveOptions opt;
    opt.max_depth = max_depth;
    const std::vector<SignRecord> parts =
        certify_sign_adaptive_serial(Quantity::d2_gamma, kappa, Verdict::negative, opt);
    Interval h = parts.front().enclosure;
    for (const auto &p : parts) {
        h = hull(h, p.enclosure);
    }
    SignRecord r = make_record(Quantity::d2_gamma, kappa, h, Verdict::negative, 0);
    for (const auto &p : parts) {
        r.depth = std::max(r.depth, p.depth);
    }
    return r;
}

Interval decimal_interval(const std::string &a, const std::string &b)
{
    auto parse = [](const std::string &s, bool up) {
        double x = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            throw std::invalid_argument("decimal_interval: cannot parse '" + s + "'");
        }
        // Integers below 2^53 are exact; anything else is widened by one ulp.
        if (x == std::trunc(x) && std::fabs(x) < 0x1p53) {
            return x;
        }
        return up ? rounding::next_up(x) : rounding::next_down(x);
    };
    return {parse(a, false), parse(b, true)};
}

Interval inflate10(const Interval &x)
{
    return inflate(x, 1.1);
}

Interval excluded_zone()
{
    return decimal_interval("0.380337", "0.380338");
}

std::size_t Certificate::leaf_count(Quantity q) const
{
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [q](const SignRecord &r) { return r.quantity == q; }));
}

namespace
{

bool is_sign_family(Quantity q)
{
    return q == Quantity::gamma_top || q == Quantity::gamma_top_d7;
}

void append(std::vector<SignRecord> &dst, const std::vector<SignRecord> &src)
{
    dst.insert(dst.end(), src.begin(), src.end());
}

NamedCheck named_check(const std::string &name, Quantity q, const Interval &x, const Interval &reference,
                       const GammaTopTable &tab)
{
    NamedCheck c;
    c.name = name;
    c.interval = x;
    c.enclosure = quantity_enclosure(q, x, tab);
    c.reference = reference;
    c.holds = reference.contains(c.enclosure);
    return c;
}

} // namespace

bool records_tile(const Certificate &c, std::string *why)
{
    auto fail = [why](const std::string &msg) {
        if (why != nullptr) {
            *why = msg;
        }
        return false;
    };
    std::vector<SignRecord> fam;
    for (const auto &r : c.records) {
        if (r.verdict == Verdict::indeterminate || r.verdict != r.expected) {
            std::ostringstream os;
            os << to_string(r.quantity) << " on " << r.interval << ": enclosure " << r.enclosure << " is "
               << to_string(r.verdict) << ", expected " << to_string(r.expected);
            return fail(os.str());
        }
        if (is_sign_family(r.quantity)) {
            fam.push_back(r);
        }
    }
    sort_records(fam);
    const Interval &z = c.excluded_zone;
    double cur = c.domain.lo();
    for (const auto &r : fam) {
        if (r.interval.lo() > cur && !(cur >= z.lo() && r.interval.lo() <= z.hi())) {
            std::ostringstream os;
            os << "gap in the tiling at kappa = " << shortest(cur);
            return fail(os.str());
        }
        cur = std::max(cur, r.interval.hi());
    }
    if (cur < c.domain.hi()) {
        return fail("tiling stops at kappa = " + shortest(cur));
    }
    return true;
}

Certificate run_full_certificate(const CertifyOptions &opt)
{
    Certificate c;
    c.max_depth = opt.max_depth;
    c.domain = opt.domain;
    c.excluded_zone = excluded_zone();
    AdaptiveOptions ao;
    ao.max_depth = opt.max_depth;
    ao.table = &opt.table;
    auto adaptive = [&](Quantity q, const Interval &x, Verdict target) {
        return opt.parallel ? certify_sign_adaptive(q, x, target, ao) : certify_sign_adaptive_serial(q, x, target, ao);
    };

    const Interval small = decimal_interval("0", "0.15");
    const Interval &z = c.excluded_zone;
    const double lo = opt.domain.lo();
    const double hi = opt.domain.hi();

    // (0, 0.15]: derivatives 0..6 vanish at 0 and the 7th is negative.
    if (lo < small.hi()) {
        append(c.records, adaptive(Quantity::gamma_top_d7, Interval(0.0, std::min(hi, small.hi())), Verdict::negative));
        c.vanishing = certify_exact_vanishing(opt.table);
        if (!c.vanishing.holds) {
            c.failures.emplace_back("gamma_top^(j)(0) does not vanish for some j <= 6");
        }
    } else {
        c.vanishing.holds = true;
    }
    const Interval neg = decimal_interval("0.15", "0.380337");
    const Interval pos = decimal_interval("0.380338", "2");
    if (std::max(lo, neg.lo()) < std::min(hi, neg.hi())) {
        append(c.records, adaptive(Quantity::gamma_top, Interval(std::max(lo, neg.lo()), std::min(hi, neg.hi())),
                                   Verdict::negative));
    }
    if (std::max(lo, pos.lo()) < hi) {
        append(c.records, adaptive(Quantity::gamma_top, Interval(std::max(lo, pos.lo()), hi), Verdict::positive));
    }

    // Simple zero inside I*.
    append(c.records, certify_sign_adaptive_serial(Quantity::gamma_top_d1, z, Verdict::positive, ao));

    const SignRecord d2 = certify_d2_gamma(z);
    c.records.push_back(d2);
    c.d2_enclosure = d2.enclosure;
    sort_records(c.records);

    c.tail = certify_tail_bound();
    c.tail_bound_checked = c.tail.holds;
    if (!c.tail.holds) {
        c.failures.emplace_back("tail inequality 27 e^16 > 1584 not verified");
    }

    c.checks.push_back(named_check("gamma_top_d7 near 0", Quantity::gamma_top_d7, decimal_interval("0", "0.00001"),
                                   inflate10(Interval(-1.30241843333415e7, -0.76279327605071e7)), opt.table));
    c.checks.push_back(named_check("gamma_top_d7 near 0.15", Quantity::gamma_top_d7,
                                   decimal_interval("0.14999", "0.15"),
                                   inflate10(Interval(-4.15360258309128e8, -3.32398859588027e8)), opt.table));
    {
        NamedCheck d2c;
        d2c.name = "d2_gamma on I*";
        d2c.interval = z;
        d2c.enclosure = d2.enclosure;
        d2c.reference = inflate10(Interval(-0.84878324244033, -0.80979638157683));
        d2c.holds = d2c.reference.contains(d2c.enclosure);
        c.checks.push_back(d2c);
    }
    {
        const SignRecord wide = certify_d2_gamma(decimal_interval("0.37", "0.39"));
        NamedCheck rc;
        rc.name = "d2_gamma negative on [0.37, 0.39]";
        rc.interval = wide.interval;
        rc.enclosure = wide.enclosure;
        rc.reference = Interval(-std::numeric_limits<double>::max(), -std::numeric_limits<double>::denorm_min());
        rc.holds = wide.verdict == Verdict::negative;
        c.checks.push_back(rc);
    }
    for (const auto &chk : c.checks) {
        if (!chk.holds) {
            c.failures.push_back("check failed: " + chk.name);
        }
    }

    std::string why;
    if (!records_tile(c, &why)) {
        c.failures.push_back(why);
    }
    if (!(c.d2_enclosure.hi() < 0.0)) {
        c.failures.emplace_back("d2_gamma enclosure on I* is not negative");
    }
    c.verified = c.failures.empty();
    return c;
}

namespace
{

std::string num(double x)
{
    return std::isfinite(x) ? shortest(x) : std::string("null");
}

std::string ival(const Interval &x)
{
    return "[" + num(x.lo()) + ", " + num(x.hi()) + "]";
}

std::string str(const std::string &s)
{
    return nlohmann::json(s).dump();
}

} // namespace

std::string to_json(const Certificate &c)
{
    std::ostringstream os;
    os << "{\n";
    os << "  \"version\": " << str(c.version) << ",\n";
    os << "  \"kappa_grid_spec\": {\n";
    os << "    \"strategy\": " << str(c.grid_strategy) << ",\n";
    os << "    \"max_depth\": " << c.max_depth << ",\n";
    os << "    \"domain\": " << ival(c.domain) << ",\n";
    os << "    \"leaves\": {";
    const Quantity qs[] = {Quantity::gamma_top_d7, Quantity::gamma_top, Quantity::gamma_top_d1, Quantity::d2_gamma};
    for (std::size_t i = 0; i < 4; ++i) {
        os << (i ? ", " : "") << str(to_string(qs[i])) << ": " << c.leaf_count(qs[i]);
    }
    os << "},\n";
    os << "    \"reference_fixed_grid\": 15000\n";
    os << "  },\n";
    os << "  \"records\": [";
    for (std::size_t i = 0; i < c.records.size(); ++i) {
        const SignRecord &r = c.records[i];
        os << (i ? "," : "") << "\n    {\"interval\": " << ival(r.interval) << ", \"quantity\": " << str(to_string(r.quantity))
           << ", \"enclosure\": " << ival(r.enclosure) << ", \"verdict\": " << str(to_string(r.verdict))
           << ", \"expected\": " << str(to_string(r.expected)) << ", \"depth\": " << r.depth << "}";
    }
    os << "\n  ],\n";
    os << "  \"excluded_zone\": " << ival(c.excluded_zone) << ",\n";
    os << "  \"tail_bound_checked\": " << (c.tail_bound_checked ? "true" : "false") << ",\n";
    os << "  \"tail_bound\": {\"lhs\": " << ival(c.tail.lhs) << ", \"rhs\": " << num(c.tail.rhs)
       << ", \"ratio_lower\": " << num(c.tail.ratio_lower) << "},\n";
    os << "  \"exact_vanishing\": {\"holds\": " << (c.vanishing.holds ? "true" : "false") << ", \"derivatives_at_zero\": [";
    for (std::size_t j = 0; j < c.vanishing.derivatives.size(); ++j) {
        os << (j ? ", " : "") << c.vanishing.derivatives[j];
    }
    os << "]},\n";
    os << "  \"checks\": [";
    for (std::size_t i = 0; i < c.checks.size(); ++i) {
        const NamedCheck &k = c.checks[i];
        os << (i ? "," : "") << "\n    {\"name\": " << str(k.name) << ", \"interval\": " << ival(k.interval)
           << ", \"enclosure\": " << ival(k.enclosure) << ", \"reference\": " << ival(k.reference)
           << ", \"holds\": " << (k.holds ? "true" : "false") << "}";
    }
    os << "\n  ],\n";
    os << "  \"d2_enclosure\": " << ival(c.d2_enclosure) << ",\n";
    os << "  \"outcome\": " << str(c.verified ? "verified" : "failed") << ",\n";
    os << "  \"failures\": [";
    for (std::size_t i = 0; i < c.failures.size(); ++i) {
        os << (i ? ", " : "") << str(c.failures[i]);
    }
    os << "],\n";
    os << "  \"toolchain\": {\"rounding\": \"rn-eft-dd-1\", \"version\": \"1.0.0\", \"compiler\": " << str(__VERSION__)
       << "}\n";
    os << "}\n";
    return os.str();
}

} // namespace stokes
