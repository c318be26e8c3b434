#include "run_config.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace stokes::cli
{

const char *to_string(Command c)
{
    switch (c) {
    case Command::certify:
        return "certify";
    case Command::index_scan:
        return "index-scan";
    case Command::curve:
        return "curve";
    case Command::spectrum:
        return "spectrum";
    }
    return "unknown";
}

const char *to_string(Format f)
{
    return f == Format::csv ? "csv" : "json";
}

Command parse_command(const std::string &s)
{
    for (Command c : {Command::certify, Command::index_scan, Command::curve, Command::spectrum}) {
        if (s == to_string(c)) {
            return c;
        }
    }
    throw std::invalid_argument("unknown command '" + s + "'");
}

Format parse_format(const std::string &s)
{
    if (s == "csv") {
        return Format::csv;
    }
    if (s == "json") {
        return Format::json;
    }
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::vector<double> RunConfig::ells() const
{
    if (ell_range) {
        const EllRange &r = *ell_range;
        std::vector<double> v;
        for (int i = 0; i < r.n; ++i) {
            v.push_back(r.n == 1 ? r.a : r.a + (r.b - r.a) * i / (r.n - 1));
        }
        return v;
    }
    if (ell) {
        return {*ell};
    }
    return {};
}

std::string to_json(const RunConfig &c)
{
    nlohmann::ordered_json j;
    j["command"] = to_string(c.command);
    j["kappa"] = c.kappa;
    j["ell"] = c.ell ? nlohmann::ordered_json(*c.ell) : nlohmann::ordered_json(nullptr);
    if (c.ell_range) {
        j["ell_range"] = {c.ell_range->a, c.ell_range->b, c.ell_range->n};
    } else {
        j["ell_range"] = nullptr;
    }
    j["ell_max"] = c.ell_max;
    j["eps"] = c.eps;
    j["modes"] = c.modes;
    j["out"] = c.out;
    j["format"] = to_string(c.format);
    j["max_depth"] = c.max_depth;
    j["domain"] = {c.domain_lo, c.domain_hi};
    return j.dump(2);
}

RunConfig config_from_json(const std::string &text)
{
    static const std::set<std::string> keys{"command", "kappa", "ell", "ell_range", "ell_max", "eps",
                                            "modes", "out", "format", "max_depth", "domain"};
    try {
        const auto j = nlohmann::json::parse(text);
        for (const auto &[k, v] : j.items()) {
            if (!keys.count(k)) {
                throw std::invalid_argument("unknown config key '" + k + "'");
            }
        }
        RunConfig c;
        c.command = parse_command(j.at("command").get<std::string>());
        c.kappa = j.at("kappa").get<double>();
        if (!j.at("ell").is_null()) {
            c.ell = j.at("ell").get<double>();
        }
        if (!j.at("ell_range").is_null()) {
            const auto &r = j.at("ell_range");
            c.ell_range = EllRange{r.at(0).get<double>(), r.at(1).get<double>(), r.at(2).get<int>()};
        }
        c.ell_max = j.at("ell_max").get<double>();
        c.eps = j.at("eps").get<std::vector<double>>();
        c.modes = j.at("modes").get<int>();
        c.out = j.at("out").get<std::string>();
        c.format = parse_format(j.at("format").get<std::string>());
        c.max_depth = j.at("max_depth").get<int>();
        c.domain_lo = j.at("domain").at(0).get<double>();
        c.domain_hi = j.at("domain").at(1).get<double>();
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
}

} // namespace stokes::cli
