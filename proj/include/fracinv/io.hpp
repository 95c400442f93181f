#pragma once

// JSON/CSV serialization for experiments and verification reports.
// Needs the single-header nlohmann json (json.hpp) on the include path.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <system_error>
#include <unistd.h>

#include <json.hpp>

#include "invasion.hpp"
#include "verify.hpp"

namespace fracinv::io {

using Json = nlohmann::ordered_json;

/// Malformed or unknown configuration input.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 10 significant digits, as a double (so JSON and CSV agree).
inline double round10(double x) {
    if (!std::isfinite(x)) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::strtod(buf, nullptr);
}

inline std::string fmt10(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

inline Json num(double x) { return std::isfinite(x) ? Json(round10(x)) : Json(nullptr); }

inline std::string method_name(std::optional<Method> m) { return m ? to_string(*m) : "auto"; }

inline std::optional<Method> parse_method(const std::string& s) {
    if (s == "auto") return std::nullopt;
    for (Method m : {Method::Subordination, Method::Fourier1D, Method::EnvelopeLower, Method::EnvelopeUpper})
        if (s == to_string(m)) return m;
    throw ConfigError("unknown method '" + s + "'");
}

inline const char* profile_name(ProfileKind k) { return k == ProfileKind::Power ? "power" : "exponential"; }

inline ProfileKind parse_profile(const std::string& s) {
    if (s == "power") return ProfileKind::Power;
    if (s == "exponential") return ProfileKind::Exponential;
    throw ConfigError("unknown profile kind '" + s + "'");
}

inline Json to_json(const ExperimentConfig& c) {
    Json j;
    j["params"] = {{"alpha", round10(c.params.alpha)}, {"rho", round10(c.params.rho)}, {"dim", c.params.dim}};
    j["profile"] = {{"kind", profile_name(c.profile.kind)}, {"m", round10(c.profile.m)}, {"beta", round10(c.profile.beta)}};
    j["t_start"] = round10(c.t_start);
    j["t_end"] = round10(c.t_end);
    j["n_samples"] = c.n_samples;
    j["method"] = method_name(c.method);
    j["output_path"] = c.output_path;
    j["format"] = c.format;
    return j;
}

namespace detail {

inline void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items())
        if (!ok.count(k)) throw ConfigError(where + ": unknown key '" + k + "'");
}

template <class T>
T get(const Json& j, const char* key, const std::string& where) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(where + ": missing or mistyped '" + key + "'");
    }
}

}  // namespace detail

/// Strict parse: unknown keys and wrong types are ConfigError. Optional fields keep defaults.
inline ExperimentConfig config_from_json(const Json& j) {
    detail::only_keys(j, {"params", "profile", "t_start", "t_end", "n_samples", "method", "output_path", "format"},
                      "config");
    ExperimentConfig c;
    const Json& p = j.contains("params") ? j["params"] : throw ConfigError("config: missing 'params'");
    detail::only_keys(p, {"alpha", "rho", "dim"}, "params");
    c.params.alpha = detail::get<double>(p, "alpha", "params");
    c.params.rho = detail::get<double>(p, "rho", "params");
    c.params.dim = detail::get<int>(p, "dim", "params");
    const Json& q = j.contains("profile") ? j["profile"] : throw ConfigError("config: missing 'profile'");
    detail::only_keys(q, {"kind", "m", "beta"}, "profile");
    c.profile.kind = parse_profile(detail::get<std::string>(q, "kind", "profile"));
    c.profile.m = detail::get<double>(q, "m", "profile");
    c.profile.beta = detail::get<double>(q, "beta", "profile");
    if (j.contains("t_start")) c.t_start = detail::get<double>(j, "t_start", "config");
    if (j.contains("t_end")) c.t_end = detail::get<double>(j, "t_end", "config");
    if (j.contains("n_samples")) c.n_samples = detail::get<int>(j, "n_samples", "config");
    if (j.contains("method")) c.method = parse_method(detail::get<std::string>(j, "method", "config"));
    if (j.contains("output_path")) c.output_path = detail::get<std::string>(j, "output_path", "config");
    if (j.contains("format")) c.format = detail::get<std::string>(j, "format", "config");
    try {
        c.validate();
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return c;
}

inline ExperimentConfig config_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
}

inline Json to_json(const TrajectorySample& s) {
    Json j;
    j["t"] = num(s.t);
    j["theta"] = num(s.theta);
    if (s.ok()) {
        j["sign"] = s.log_u.sign_int();
        j["log_u"] = num(s.log_u.log_abs);
    } else {
        j["sign"] = nullptr;
        j["log_u"] = nullptr;
    }
    j["method"] = to_string(s.method);
    j["error"] = s.ok() ? Json(nullptr) : Json(s.error);
    return j;
}

inline Json to_json(const ExperimentReport& r) {
    Json j;
    j["config"] = to_json(r.config);
    j["prediction"] = to_string(r.prediction);
    j["verdict"] = to_string(r.verdict);
    j["agrees"] = r.agrees;
    const auto methods = methods_for(r.config.params, r.config.method);
    Json cls = Json::array();
    for (std::size_t i = 0; i < r.classifications.size(); ++i) {
        const auto& c = r.classifications[i];
        cls.push_back({{"method", to_string(methods[i])},
                       {"verdict", to_string(c.verdict)},
                       {"slope", num(c.slope)},
                       {"samples_used", c.samples_used}});
    }
    j["classifications"] = cls;
    Json ss = Json::array();
    for (const auto& s : r.samples) ss.push_back(to_json(s));
    j["samples"] = ss;
    return j;
}

/// CSV with header t,theta,sign,log_u,method; failed points carry nan.
inline std::string to_csv(std::span<const TrajectorySample> samples) {
    std::string out = "t,theta,sign,log_u,method\n";
    for (const auto& s : samples) {
        out += fmt10(s.t) + "," + fmt10(s.theta) + ",";
        if (s.ok()) out += std::to_string(s.log_u.sign_int()) + "," + fmt10(s.log_u.log_abs);
        else out += "nan,nan";
        out += ",";
        out += to_string(s.method);
        out += "\n";
    }
    return out;
}

inline Json to_json(const SuiteReport& r) {
    Json j;
    j["suite_name"] = r.suite_name;
    j["cases_run"] = r.cases_run;
    j["cases_passed"] = r.cases_passed;
    j["worst_rel_error"] = num(r.worst_rel_error);
    j["worst_case_inputs"] = r.worst_case_inputs;
    j["passed"] = r.passed();
    return j;
}

/// Writes to a sibling temp file, then renames over the target.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << content;
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

}  // namespace fracinv::io
