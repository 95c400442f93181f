#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <fracinv/io.hpp>

using namespace fracinv;

namespace {

const char* kConfig = R"({
  "params": {"alpha": 0.5, "rho": 1, "dim": 1},
  "profile": {"kind": "power", "m": 1, "beta": 1},
  "t_start": 5,
  "t_end": 60,
  "n_samples": 6,
  "method": "auto",
  "output_path": "",
  "format": "json"
})";

}  // namespace

TEST_CASE("config parsing is strict", "[io]") {
    const auto cfg = io::config_from_string(kConfig);
    CHECK(cfg.params.alpha == 0.5);
    CHECK(cfg.n_samples == 6);
    CHECK_FALSE(cfg.method.has_value());
    CHECK(cfg.format == "json");

    CHECK_THROWS_AS(io::config_from_string(R"({"params":{"alpha":0.5,"rho":1,"dim":1},
        "profile":{"kind":"power","m":1,"beta":1},"t_strat":5})"), io::ConfigError);
    CHECK_THROWS_AS(io::config_from_string(R"({"params":{"alpha":0.5,"rho":1,"dim":1,"extra":1},
        "profile":{"kind":"power","m":1,"beta":1}})"), io::ConfigError);
    CHECK_THROWS_AS(io::config_from_string(R"({"params":{"alpha":1.5,"rho":1,"dim":1},
        "profile":{"kind":"power","m":1,"beta":1}})"), io::ConfigError);
    CHECK_THROWS_AS(io::config_from_string(R"({"params":{"alpha":"half","rho":1,"dim":1},
        "profile":{"kind":"power","m":1,"beta":1}})"), io::ConfigError);
    CHECK_THROWS_AS(io::config_from_string("{not json"), io::ConfigError);
    CHECK_THROWS_AS(io::config_from_string(R"({"params":{"alpha":0.5,"rho":1,"dim":1},
        "profile":{"kind":"power","m":1,"beta":1},"n_samples":3})"), io::ConfigError);
}

TEST_CASE("config and report JSON round-trip byte for byte", "[io]") {
    const auto cfg = io::config_from_string(kConfig);
    const std::string once = io::to_json(cfg).dump(2);
    CHECK(io::to_json(io::config_from_string(once)).dump(2) == once);

    const auto rep = run_experiment(cfg);
    const std::string text = io::to_json(rep).dump(2);
    CHECK(io::Json::parse(text).dump(2) == text);
    const auto j = io::Json::parse(text);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"config", "prediction", "verdict", "agrees", "classifications", "samples"});
    CHECK(j["samples"].size() == 6);
}

TEST_CASE("CSV layout", "[io]") {
    auto cfg = io::config_from_string(kConfig);
    cfg.n_samples = 5;
    auto rep = run_experiment(cfg);
    rep.samples[2].error = "QuadratureFailure: synthetic";
    const auto csv = io::to_csv(rep.samples);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,theta,sign,log_u,method");
    int rows = 0;
    double prev_t = 0;
    while (std::getline(in, line)) {
        ++rows;
        const double t = std::stod(line.substr(0, line.find(',')));
        CHECK(t > prev_t);
        prev_t = t;
        if (rows == 3) CHECK(line.find("nan,nan,subordination") != std::string::npos);
        else CHECK(line.find(",1,") != std::string::npos);
    }
    CHECK(rows == 5);
    CHECK(io::fmt10(1.0 / 3) == "0.3333333333");
}

TEST_CASE("atomic write replaces the whole file", "[io]") {
    const auto dir = std::filesystem::temp_directory_path() / "fracinv_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.csv";
    io::write_atomic(path, "first version, longer\n");
    io::write_atomic(path, "second\n");
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == "second\n");
    int n = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++n;
    CHECK(n == 1);
    std::filesystem::remove_all(dir);
    CHECK_THROWS(io::write_atomic(dir / "missing" / "x.csv", "x"));
}

TEST_CASE("suite report JSON", "[io]") {
    SuiteReport r;
    r.suite_name = "MLIdentities";
    r.cases_run = 3;
    r.cases_passed = 3;
    r.worst_rel_error = 1.23456789012345e-9;
    const auto j = io::to_json(r);
    CHECK(j.dump() ==
          R"({"suite_name":"MLIdentities","cases_run":3,"cases_passed":3,"worst_rel_error":1.23456789e-09,"worst_case_inputs":"","passed":true})");
}
