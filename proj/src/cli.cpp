#include "harmonic/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "harmonic/format.hpp"
#include "harmonic/kernels.hpp"
#include "harmonic/quadrature.hpp"
#include "harmonic/report_io.hpp"
#include "harmonic/specfun.hpp"
#include "harmonic/termsum.hpp"
#include "harmonic/verify.hpp"

namespace harmonic::cli {

namespace {

struct TargetSpec {
    std::set<std::string> required;
    std::set<std::string> optional;
};

const std::map<std::string, TargetSpec>& eval_registry() {
    static const std::map<std::string, TargetSpec> reg = {
        {"gamma", {{"z"}, {}}},
        {"digamma", {{"z"}, {}}},
        {"pochhammer", {{"a", "k"}, {}}},
        {"hyp2f1", {{"a", "b", "c", "z"}, {}}},
        {"odd-resolvent", {{"m", "lambda", "r"}, {}}},
        {"hyperbolic-resolvent", {{"n", "lambda", "r"}, {}}},
        {"hyperbolic-resolvent-half", {{"n", "lambda", "r"}, {}}},
        {"spherical-function", {{"n", "lambda", "r"}, {}}},
        {"na-resolvent", {{"dim-n", "dim-z", "lambda", "r"}, {}}},
        {"bundle-resolvent", {{"dim-n", "dim-z", "tau", "lambda", "r"}, {"constant"}}},
        {"transform-kernel", {{"dim-n", "dim-z", "r", "rho"}, {}}},
        {"integrate-transform", {{"dim-n", "dim-z", "lambda", "r"}, {}}},
    };
    return reg;
}

const std::map<std::string, TargetSpec>& verify_registry() {
    static const std::map<std::string, TargetSpec> reg = {
        {"lemma31", {{"a", "b", "c", "mu", "x"}, {}}},
        {"lemma32", {{"a", "b", "c", "nu", "x"}, {}}},
        {"key-lemma", {{"a", "b", "c", "mu", "nu", "x"}, {"variant"}}},
        {"quadratic-transform", {{"n", "lambda", "r"}, {}}},
        {"recurrence", {{"n", "lambda", "r"}, {}}},
        {"transform", {{"dim-n", "dim-z", "lambda", "r"}, {}}},
        {"bundle-transform", {{"dim-n", "dim-z", "tau", "lambda", "r"}, {"constant"}}},
    };
    return reg;
}

const std::set<std::string>& sweep_targets() {
    static const std::set<std::string> targets = {
        "odd-resolvent",       "hyperbolic-resolvent", "hyperbolic-resolvent-half",
        "spherical-function",  "na-resolvent",         "bundle-resolvent",
    };
    return targets;
}

[[noreturn]] void usage(const std::string& message) {
    throw UsageError(message +
                     "\nusage: harmonic-kernels <eval|verify|sweep|suite> <target> [--key value]... "
                     "[--tol T] [--format json|csv] [--output PATH]");
}

std::string get(const CliConfig& cfg, const std::string& key) {
    auto it = cfg.parameters.find(key);
    if (it == cfg.parameters.end()) usage("missing parameter --" + key);
    return it->second;
}

using Complex = std::complex<double>;

Complex eval_target(const CliConfig& cfg) {
    using fmt::parse_complex;
    using fmt::parse_double;
    using fmt::parse_int;
    const std::string& t = cfg.target;
    if (t == "gamma") return specfun::gamma(parse_complex(get(cfg, "z")));
    if (t == "digamma") return specfun::digamma(parse_complex(get(cfg, "z")));
    if (t == "pochhammer") {
        int k = parse_int(get(cfg, "k"));
        if (k < 0) usage("pochhammer: k must be nonnegative");
        return specfun::pochhammer(parse_complex(get(cfg, "a")), static_cast<unsigned>(k));
    }
    if (t == "hyp2f1")
        return specfun::hyp2f1(parse_complex(get(cfg, "a")), parse_complex(get(cfg, "b")),
                               parse_complex(get(cfg, "c")), parse_double(get(cfg, "z")));
    if (t == "odd-resolvent")
        return closedform::odd_resolvent(parse_int(get(cfg, "m")), parse_complex(get(cfg, "lambda")),
                                         parse_double(get(cfg, "r")));
    if (t == "hyperbolic-resolvent")
        return kernels::hyperbolic_resolvent(parse_int(get(cfg, "n")),
                                             parse_complex(get(cfg, "lambda")),
                                             parse_double(get(cfg, "r")));
    if (t == "hyperbolic-resolvent-half")
        return kernels::hyperbolic_resolvent_half(parse_int(get(cfg, "n")),
                                                  parse_complex(get(cfg, "lambda")),
                                                  parse_double(get(cfg, "r")));
    if (t == "spherical-function")
        return kernels::spherical_function(parse_int(get(cfg, "n")),
                                           parse_complex(get(cfg, "lambda")),
                                           parse_double(get(cfg, "r")));
    if (t == "na-resolvent") {
        kernels::SpaceDescriptor X(parse_int(get(cfg, "dim-n")), parse_int(get(cfg, "dim-z")));
        return kernels::na_resolvent(X, parse_complex(get(cfg, "lambda")),
                                     parse_double(get(cfg, "r")));
    }
    if (t == "bundle-resolvent") {
        kernels::SpaceDescriptor X(parse_int(get(cfg, "dim-n")), parse_int(get(cfg, "dim-z")));
        auto it = cfg.parameters.find("constant");
        kernels::BundleConstant variant = kernels::BundleConstant::printed;
        if (it != cfg.parameters.end()) {
            if (it->second == "gamma-matched")
                variant = kernels::BundleConstant::gamma_matched;
            else if (it->second != "printed")
                usage("bundle-resolvent: constant must be printed or gamma-matched");
        }
        return kernels::bundle_resolvent(X, parse_double(get(cfg, "tau")),
                                         parse_complex(get(cfg, "lambda")),
                                         parse_double(get(cfg, "r")), variant);
    }
    if (t == "transform-kernel") {
        kernels::SpaceDescriptor X(parse_int(get(cfg, "dim-n")), parse_int(get(cfg, "dim-z")));
        return {kernels::transform_kernel(X, parse_double(get(cfg, "r")),
                                          parse_double(get(cfg, "rho"))),
                0.0};
    }
    if (t == "integrate-transform") {
        kernels::SpaceDescriptor X(parse_int(get(cfg, "dim-n")), parse_int(get(cfg, "dim-z")));
        auto res = quadrature::integrate_transform(X, parse_complex(get(cfg, "lambda")),
                                                   parse_double(get(cfg, "r")), cfg.tol);
        if (!res.converged) throw ConvergenceError("integrate-transform did not converge");
        return res.value;
    }
    usage("unknown eval target '" + t + "'");
}

void write_payload(const CliConfig& cfg, const std::string& payload, std::ostream& out) {
    if (cfg.output_path) {
        std::ofstream file(*cfg.output_path, std::ios::binary);
        if (!file) throw UsageError("cannot open output file '" + *cfg.output_path + "'");
        file << payload;
        return;
    }
    out << payload;
}

bool numerical_skip(const verify::IdentityReport& rep) {
    if (rep.status != verify::Status::skipped) return false;
    auto it = rep.parameters.find("skip_reason");
    if (it == rep.parameters.end()) return true;
    return it->second.rfind("precondition:", 0) != 0;
}

int emit_reports(const CliConfig& cfg, const std::vector<verify::IdentityReport>& reports,
                 std::ostream& out) {
    std::string payload = (cfg.format == OutputFormat::json) ? report_io::to_json(reports)
                                                             : report_io::to_csv(reports);
    write_payload(cfg, payload, out);
    bool any_fail = false;
    bool any_numerical = false;
    for (const auto& r : reports) {
        any_fail |= r.status == verify::Status::fail;
        any_numerical |= numerical_skip(r);
    }
    if (any_fail) return kExitIdentityFailed;
    if (any_numerical) return kExitNumerical;
    return kExitOk;
}

int run_sweep(const CliConfig& cfg, std::ostream& out) {
    double r_min = fmt::parse_double(get(cfg, "r-min"));
    double r_max = fmt::parse_double(get(cfg, "r-max"));
    int steps = fmt::parse_int(get(cfg, "steps"));
    if (!(r_max > r_min) || steps < 2) usage("sweep: need r-max > r-min and steps >= 2");

    CliConfig point = cfg;
    point.command = Command::eval;
    std::ostringstream json_rows;
    std::ostringstream csv_rows;
    csv_rows << "r,value_re,value_im\n";
    json_rows << "[\n";
    for (int i = 0; i < steps; ++i) {
        double r = r_min + (r_max - r_min) * i / (steps - 1.0);
        point.parameters["r"] = fmt::format_double(r);
        Complex v = eval_target(point);
        csv_rows << fmt::format_double(r) << ',' << fmt::format_double(v.real()) << ','
                 << fmt::format_double(v.imag()) << '\n';
        json_rows << "  {\"r\": " << fmt::format_double(r)
                  << ", \"value_re\": " << fmt::format_double(v.real())
                  << ", \"value_im\": " << fmt::format_double(v.imag()) << "}"
                  << (i + 1 < steps ? ",\n" : "\n");
    }
    json_rows << "]\n";
    write_payload(cfg, cfg.format == OutputFormat::json ? json_rows.str() : csv_rows.str(), out);
    return kExitOk;
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& argv) {
    if (argv.size() < 2) usage("missing command");
    CliConfig cfg;
    const std::string& cmd = argv[1];
    if (cmd == "eval")
        cfg.command = Command::eval;
    else if (cmd == "verify")
        cfg.command = Command::verify;
    else if (cmd == "sweep")
        cfg.command = Command::sweep;
    else if (cmd == "suite")
        cfg.command = Command::suite;
    else
        usage("unknown command '" + cmd + "'");

    size_t i = 2;
    if (cfg.command != Command::suite) {
        if (i >= argv.size() || argv[i].rfind("--", 0) == 0) usage("missing target");
        cfg.target = argv[i++];
    }

    bool tol_given = false;
    for (; i < argv.size(); i += 2) {
        const std::string& flag = argv[i];
        if (flag.rfind("--", 0) != 0) usage("expected --key, got '" + flag + "'");
        if (i + 1 >= argv.size()) usage("flag '" + flag + "' needs a value");
        std::string key = flag.substr(2);
        const std::string& value = argv[i + 1];
        if (key == "tol") {
            cfg.tol = fmt::parse_double(value);
            if (!(cfg.tol > 0.0)) usage("--tol must be positive");
            tol_given = true;
        } else if (key == "output") {
            cfg.output_path = value;
        } else if (key == "format") {
            if (value == "json")
                cfg.format = OutputFormat::json;
            else if (value == "csv")
                cfg.format = OutputFormat::csv;
            else
                usage("--format must be json or csv");
        } else if (key == "config" && cfg.command == Command::suite) {
            cfg.target = value;
        } else {
            if (cfg.parameters.count(key)) usage("duplicate parameter --" + key);
            cfg.parameters[key] = value;
        }
    }

    // registry validation
    switch (cfg.command) {
        case Command::eval:
        case Command::sweep: {
            auto it = eval_registry().find(cfg.target);
            if (it == eval_registry().end()) usage("unknown target '" + cfg.target + "'");
            if (cfg.command == Command::sweep && !sweep_targets().count(cfg.target))
                usage("target '" + cfg.target + "' does not support sweep");
            std::set<std::string> required = it->second.required;
            std::set<std::string> allowed = required;
            allowed.insert(it->second.optional.begin(), it->second.optional.end());
            if (cfg.command == Command::sweep) {
                required.erase("r");
                allowed.erase("r");
                for (const char* k : {"r-min", "r-max", "steps"}) {
                    required.insert(k);
                    allowed.insert(k);
                }
            }
            for (const auto& [k, v] : cfg.parameters)
                if (!allowed.count(k)) usage("unknown parameter --" + k + " for " + cfg.target);
            for (const auto& k : required)
                if (!cfg.parameters.count(k)) usage("missing parameter --" + k + " for " + cfg.target);
            // values are validated here so malformed input is a usage error
            for (const auto& [k, v] : cfg.parameters) {
                if (k == "lambda" || k == "z" || k == "a" || k == "b" || k == "c")
                    fmt::parse_complex(v);
                else if (k == "constant") {
                    if (v != "printed" && v != "gamma-matched")
                        usage("--constant must be printed or gamma-matched");
                } else if (k == "steps" || k == "n" || k == "m" || k == "k" || k == "dim-n" ||
                           k == "dim-z")
                    fmt::parse_int(v);
                else
                    fmt::parse_double(v);
            }
            break;
        }
        case Command::verify: {
            auto it = verify_registry().find(cfg.target);
            if (it == verify_registry().end()) usage("unknown identity '" + cfg.target + "'");
            std::set<std::string> allowed = it->second.required;
            allowed.insert(it->second.optional.begin(), it->second.optional.end());
            for (const auto& [k, v] : cfg.parameters)
                if (!allowed.count(k)) usage("unknown parameter --" + k + " for " + cfg.target);
            for (const auto& k : it->second.required)
                if (!cfg.parameters.count(k)) usage("missing parameter --" + k + " for " + cfg.target);
            if (!tol_given) cfg.tol = 1e-6;
            break;
        }
        case Command::suite:
            if (cfg.target.empty()) cfg.target = "default";
            if (!cfg.parameters.empty())
                usage("suite accepts only --config, --format, --output, --tol");
            break;
    }
    return cfg;
}

int execute(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::eval: {
                Complex v = eval_target(cfg);
                write_payload(cfg, fmt::format_complex(v) + "\n", out);
                return kExitOk;
            }
            case Command::sweep:
                return run_sweep(cfg, out);
            case Command::verify: {
                verify::CheckRequest req{cfg.target, cfg.parameters, cfg.tol};
                verify::IdentityReport rep = verify::run_check(req);
                return emit_reports(cfg, {rep}, out);
            }
            case Command::suite: {
                verify::SuiteConfig suite;
                if (cfg.target == "default") {
                    suite = verify::default_suite_config();
                } else {
                    std::ifstream file(cfg.target, std::ios::binary);
                    if (!file) throw UsageError("cannot read config '" + cfg.target + "'");
                    std::ostringstream buf;
                    buf << file.rdbuf();
                    suite = report_io::config_from_json(buf.str());
                }
                auto reports = verify::run_suite(suite);
                int rc = emit_reports(cfg, reports, out);
                size_t passed = 0;
                for (const auto& r : reports)
                    if (r.status == verify::Status::pass) ++passed;
                err << passed << "/" << reports.size() << " identities passed\n";
                return rc;
            }
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    try {
        CliConfig cfg = parse_args(argv);
        return execute(cfg, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace harmonic::cli
