#include "cli_app.hpp"
#include "run_config.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using namespace stokes::cli;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    args.insert(args.begin(), "stokes");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("usage errors exit with 1")
{
    CHECK(call({}).code == exit_usage);
    const Result r = call({"curve", "--bogus"});
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("--kappa") != std::string::npos);
    CHECK(call({"frobnicate"}).code == exit_usage);
    CHECK(call({"index-scan", "--kappa", "1"}).code == exit_usage);
    CHECK(call({"index-scan", "--kappa", "-1", "--ell", "0.1"}).code == exit_usage);
    CHECK(call({"spectrum", "--kappa", "1"}).code == exit_usage);
    CHECK(call({"spectrum", "--kappa", "1", "--ell", "0.1", "--eps", "0.5"}).code == exit_usage);
    CHECK(call({"index-scan", "--ell-range", "0", "0.1", "2.5"}).code == exit_usage);
    CHECK(call({"certify", "--domain", "2", "1"}).code == exit_usage);
    CHECK(call({"--help"}).code == exit_ok);
}

TEST_CASE("certify writes a verified certificate atomically")
{
    const auto dir = std::filesystem::temp_directory_path() / "stokes_cli_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "cert.json").string();
    const Result r = call({"certify", "--out", path});
    CHECK(r.code == exit_ok);
    const std::string a = slurp(path);
    CHECK(a.find("\"outcome\": \"verified\"") != std::string::npos);
    CHECK(call({"certify", "--out", path}).code == exit_ok);
    CHECK(slurp(path) == a);
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        CHECK(e.path().filename().string().find(".tmp.") == std::string::npos);
    }
}

TEST_CASE("curve reproduces the collision curve")
{
    const Result r = call({"curve", "--kappa", "1", "--ell-max", "0.3"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("ell,xi_plus,sigma_plus,residual\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 102);
    CHECK(r.out.find("0.3,0.45018143320774") != std::string::npos);
    const Result j = call({"curve", "--kappa", "1", "--ell-max", "0.1", "--ell-range", "0", "0", "5", "--format", "json"});
    CHECK(j.code == exit_ok);
    CHECK(j.out.find("\"xi_plus\"") != std::string::npos);
}

TEST_CASE("index-scan output")
{
    const Result r = call({"index-scan", "--kappa", "1", "--ell-range", "0.01", "0.1", "10"});
    CHECK(r.code == exit_ok);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
    CHECK(call({"index-scan", "--kappa", "1", "--ell", "0.1", "--format", "json"}).out.find("0.6965123042121") !=
          std::string::npos);
}

TEST_CASE("spectrum summary")
{
    const Result r = call({"spectrum", "--kappa", "1", "--ell", "0.1", "--eps", "0.01", "--modes", "12", "--format",
                           "json"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("max_growth") != std::string::npos);
}

TEST_CASE("run config round-trips through JSON")
{
    RunConfig c;
    c.command = Command::spectrum;
    c.kappa = 0.7;
    c.ell = 0.1;
    c.ell_range = EllRange{0.01, 0.2, 7};
    c.eps = {0.005, 0.01, 0.02};
    c.modes = 32;
    c.out = "x.csv";
    c.format = Format::json;
    c.max_depth = 30;
    c.domain_lo = 0.1;
    c.domain_hi = 1.9;
    CHECK(config_from_json(to_json(c)) == c);
    CHECK(config_from_json(to_json(RunConfig{})) == RunConfig{});
    std::string bad = to_json(c);
    bad.insert(1, "\"surprise\": 1,");
    CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json("{"), std::invalid_argument);
    CHECK(c.ells().size() == 7);
}
