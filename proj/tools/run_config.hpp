#ifndef STOKES_RUN_CONFIG_HPP
#define STOKES_RUN_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

namespace stokes::cli
{

enum class Command { certify, index_scan, curve, spectrum };
enum class Format { csv, json };

const char *to_string(Command c);
const char *to_string(Format f);
Command parse_command(const std::string &s);
Format parse_format(const std::string &s);

struct EllRange {
    double a = 0.0;
    double b = 0.0;
    int n = 0;

    friend bool operator==(const EllRange &, const EllRange &) = default;
};

struct RunConfig {
    Command command = Command::certify;
    double kappa = 1.0;
    std::optional<double> ell;
    std::optional<EllRange> ell_range;
    double ell_max = 0.3;
    std::vector<double> eps;
    int modes = 24;
    std::string out;  // empty: stdout
    Format format = Format::csv;
    int max_depth = 40;
    double domain_lo = 0.0;
    double domain_hi = 2.0;

    friend bool operator==(const RunConfig &, const RunConfig &) = default;

    // ell values requested by --ell or --ell-range.
    [[nodiscard]] std::vector<double> ells() const;
};

std::string to_json(const RunConfig &c);
// Throws std::invalid_argument on malformed input or unknown keys.
RunConfig config_from_json(const std::string &text);

} // namespace stokes::cli

#endif
