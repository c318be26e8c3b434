#include "cli_app.hpp"

#include "run_config.hpp"

#include <stokes/certify.hpp>
#include <stokes/collision.hpp>
#include <stokes/index.hpp>
#include <stokes/io.hpp>
#include <stokes/spectrum.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace stokes::cli
{

namespace
{

void emit(const RunConfig &cfg, const std::string &content, std::ostream &out)
{
    if (cfg.out.empty()) {
        out << content;
    } else {
        atomic_write(cfg.out, content);
    }
}

std::string index_json(const std::vector<IndexValue> &rows)
{
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        a.push_back({{"kappa", r.kappa},
                     {"ell", r.ell},
                     {"gamma_I", r.gamma_I},
                     {"gamma_II", r.gamma_II},
                     {"gamma", r.gamma},
                     {"route", to_string(r.route)}});
    }
    return a.dump(2) + "\n";
}

std::string curve_json(const std::vector<CollisionPoint> &pts)
{
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto &p : pts) {
        a.push_back({{"ell", p.ell}, {"xi_plus", p.xi_plus}, {"sigma_plus", p.sigma_plus}, {"residual", p.residual}});
    }
    return a.dump(2) + "\n";
}

int execute(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    std::ostringstream os;
    switch (cfg.command) {
    case Command::certify: {
        CertifyOptions opt;
        opt.domain = Interval(cfg.domain_lo, cfg.domain_hi);
        opt.max_depth = cfg.max_depth;
        const Certificate c = run_full_certificate(opt);
        emit(cfg, to_json(c), out);
        if (!c.verified) {
            for (const auto &f : c.failures) {
                err << "certificate failure: " << f << '\n';
            }
            return exit_certificate_failed;
        }
        return exit_ok;
    }
    case Command::index_scan: {
        const std::vector<double> ells = cfg.ells();
        if (ells.empty()) {
            err << "index-scan needs --ell or --ell-range\n";
            return exit_usage;
        }
        const auto rows = index_scan(cfg.kappa, ells);
        if (cfg.format == Format::csv) {
            write_index_csv(os, rows);
            emit(cfg, os.str(), out);
        } else {
            emit(cfg, index_json(rows), out);
        }
        return exit_ok;
    }
    case Command::curve: {
        const WaveParams params = WaveParams::from_kappa(Interval(cfg.kappa));
        const int n = cfg.ell_range ? cfg.ell_range->n : 101;
        const auto pts = sample_curve(params, cfg.ell_max, n);
        if (cfg.format == Format::csv) {
            write_curve_csv(os, pts);
            emit(cfg, os.str(), out);
        } else {
            emit(cfg, curve_json(pts), out);
        }
        return exit_ok;
    }
    case Command::spectrum: {
        if (!cfg.ell) {
            err << "spectrum needs --ell\n";
            return exit_usage;
        }
        const std::vector<double> eps = cfg.eps.empty() ? std::vector<double>{0.01} : cfg.eps;
        ScanOptions opt;
        opt.N = cfg.modes;
        std::vector<GrowthScan> scans;
        for (double e : eps) {
            scans.push_back(growth_scan(cfg.kappa, *cfg.ell, e, opt));
        }
        if (cfg.format == Format::csv) {
            write_spectrum_csv(os, scans);
            emit(cfg, os.str(), out);
        } else {
            emit(cfg, spectrum_summary_json(scans), out);
        }
        return exit_ok;
    }
    }
    return exit_usage;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Transverse instability index of finite-depth Stokes waves"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<double> ell_range;
    std::vector<double> domain;
    std::string format = "csv";
    std::optional<double> ell;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--kappa", cfg.kappa, "Wave number kappa > 0")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "Output file (written atomically); stdout if omitted");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App *certify = app.add_subcommand("certify", "Run the validated sign verification and emit a certificate");
    certify->add_option("--domain", domain, "Claimed kappa domain a b")->expected(2);
    certify->add_option("--max-depth", cfg.max_depth, "Maximal bisection depth")->check(CLI::Range(0, 60));
    certify->add_option("--out", cfg.out, "Certificate file; stdout if omitted");

    CLI::App *scan = app.add_subcommand("index-scan", "Evaluate Gamma(kappa, ell) over ell values");
    add_common(scan);
    scan->add_option("--ell", ell, "Single ell");
    scan->add_option("--ell-range", ell_range, "a b n")->expected(3);

    CLI::App *curve = app.add_subcommand("curve", "Sample the collision curve (ell, xi_+, sigma_+)");
    add_common(curve);
    curve->add_option("--ell-max", cfg.ell_max, "Sample |ell| <= ell_max")->check(CLI::PositiveNumber);
    curve->add_option("--ell-range", ell_range, "a b n; only n is used, symmetric samples")->expected(3);

    CLI::App *spec = app.add_subcommand("spectrum", "Hill's-method growth scan around the collision");
    add_common(spec);
    spec->add_option("--ell", ell, "Transverse frequency")->required();
    spec->add_option("--eps", cfg.eps, "Amplitudes, comma separated")->delimiter(',');
    spec->add_option("--modes", cfg.modes, "Fourier truncation N")->check(CLI::Range(8, 512));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        CLI::App *chosen = app.get_subcommands().front();
        cfg.command = parse_command(chosen->get_name());
        cfg.format = parse_format(format);
        cfg.ell = ell;
        if (!ell_range.empty()) {
            cfg.ell_range = EllRange{ell_range[0], ell_range[1], static_cast<int>(ell_range[2])};
            if (cfg.ell_range->n < 1 || static_cast<double>(cfg.ell_range->n) != ell_range[2]) {
                throw std::invalid_argument("--ell-range: n must be a positive integer");
            }
        }
        if (!domain.empty()) {
            cfg.domain_lo = domain[0];
            cfg.domain_hi = domain[1];
            if (!(0.0 <= cfg.domain_lo && cfg.domain_lo < cfg.domain_hi)) {
                throw std::invalid_argument("--domain: need 0 <= a < b");
            }
        }
        for (double e : cfg.eps) {
            if (!(std::fabs(e) <= 0.1)) {
                throw std::invalid_argument("--eps: amplitudes must satisfy |eps| <= 0.1");
            }
        }
    } catch (const std::invalid_argument &e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        return execute(cfg, out, err);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace stokes::cli
