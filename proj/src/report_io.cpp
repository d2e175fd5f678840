#include "harmonic/report_io.hpp"

#include <set>

#include <json.hpp>

#include "harmonic/format.hpp"

namespace harmonic::report_io {

using nlohmann::json;
using verify::IdentityReport;

namespace {

json report_to_json(const IdentityReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    return json{{"identity", r.identity_name},
                {"params", params},
                {"lhs_re", r.lhs.real()},
                {"lhs_im", r.lhs.imag()},
                {"rhs_re", r.rhs.real()},
                {"rhs_im", r.rhs.imag()},
                {"abs_err", r.abs_err},
                {"rel_err", r.rel_err},
                {"quad_error", r.quad_error},
                {"tolerance", r.tolerance},
                {"status", verify::to_string(r.status)}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_json(const std::vector<IdentityReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<IdentityReport>& reports) {
    std::set<std::string> param_keys;
    for (const auto& r : reports)
        for (const auto& [k, v] : r.parameters) param_keys.insert(k);

    std::string out = "identity";
    for (const auto& k : param_keys) out += ",param." + k;
    out += ",lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,quad_error,tolerance,status\n";

    for (const auto& r : reports) {
        out += csv_escape(r.identity_name);
        for (const auto& k : param_keys) {
            out += ',';
            auto it = r.parameters.find(k);
            if (it != r.parameters.end()) out += csv_escape(it->second);
        }
        for (double v : {r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.abs_err,
                         r.rel_err, r.quad_error, r.tolerance}) {
            out += ',';
            out += fmt::format_double(v);
        }
        out += ',';
        out += verify::to_string(r.status);
        out += '\n';
    }
    return out;
}

verify::SuiteConfig config_from_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("checks") || !doc["checks"].is_array())
        throw UsageError("config: expected an object with a 'checks' array");
    verify::SuiteConfig cfg;
    for (const auto& item : doc["checks"]) {
        if (!item.is_object() || !item.contains("identity"))
            throw UsageError("config: every check needs an 'identity'");
        verify::CheckRequest req;
        req.identity = item["identity"].get<std::string>();
        req.tol = item.value("tol", 1e-6);
        if (item.contains("params")) {
            if (!item["params"].is_object()) throw UsageError("config: 'params' must be an object");
            for (const auto& [k, v] : item["params"].items()) {
                if (v.is_string())
                    req.params[k] = v.get<std::string>();
                else
                    req.params[k] = v.dump();
            }
        }
        cfg.checks.push_back(std::move(req));
    }
    return cfg;
}

std::string config_to_json(const verify::SuiteConfig& config) {
    json arr = json::array();
    for (const auto& c : config.checks) {
        json params = json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        arr.push_back(json{{"identity", c.identity}, {"tol", c.tol}, {"params", params}});
    }
    return json{{"checks", arr}}.dump(2) + "\n";
}

}  // namespace harmonic::report_io
