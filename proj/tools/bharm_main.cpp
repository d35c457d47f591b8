// Command-line front end: kernel/transform evaluation to CSV and audit
// suites to JSON. Exit codes: 0 success (and every audit passed), 2 usage
// or configuration error, 3 numerical failure (including failed audits,
// whose reports are still written).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bharm/audit.hpp"
#include "bharm/besselops.hpp"
#include "bharm/errors.hpp"
#include "bharm/fbt.hpp"
#include "bharm/kernels.hpp"
#include "bharm/quadrature.hpp"

namespace {

using bharm::AuditConfig;
using bharm::AuditReport;
using bharm::ConfigError;
using bharm::QuadSpec;
using bharm::Rational;
using bharm::ScalarField;
using bharm::SignatureSplit;
using bharm::WeightVector;
using ojson = nlohmann::ordered_json;

struct RunConfig {
    std::optional<int> n;
    std::optional<std::string> v_text;
    std::optional<int> p, q;
    std::optional<int> k;
    std::optional<int> nodes;
    std::optional<double> radius;
    std::optional<std::string> eps_text;
    std::optional<std::string> suite;
    std::optional<std::string> out;
    std::optional<std::string> grid;
};

std::string format17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse " + what + " entry '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigError(what + " list is empty");
    return out;
}

// Grid spec: per-axis "start:stop:count", axes joined by ';'. A single
// axis spec is replicated across all axes.
std::vector<std::vector<double>> parse_grid(const std::string& text, int n) {
    std::vector<std::vector<double>> axes;
    std::stringstream ss(text);
    std::string axis_text;
    while (std::getline(ss, axis_text, ';')) {
        double start = 0, stop = 0;
        int count = 0;
        char extra = 0;
        if (std::sscanf(axis_text.c_str(), "%lf:%lf:%d%c", &start, &stop,
                        &count, &extra) != 3 ||
            count < 1)
            throw ConfigError("bad grid axis '" + axis_text +
                              "'; expected start:stop:count");
        std::vector<double> pts(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            pts[static_cast<std::size_t>(i)] =
                count == 1 ? start
                           : start + i * (stop - start) / (count - 1);
        axes.push_back(std::move(pts));
    }
    if (axes.empty()) throw ConfigError("empty grid spec");
    if (axes.size() == 1 && n > 1)
        axes.assign(static_cast<std::size_t>(n), axes.front());
    if (static_cast<int>(axes.size()) != n)
        throw ConfigError("grid has " + std::to_string(axes.size()) +
                          " axes but the dimension is " + std::to_string(n));
    return axes;
}

WeightVector resolve_weights(const RunConfig& cfg) {
    if (cfg.v_text) {
        WeightVector v = WeightVector::parse(*cfg.v_text);
        if (cfg.n && *cfg.n != v.dim())
            throw ConfigError("--n disagrees with the dimension of --v");
        return v;
    }
    const int n = cfg.n.value_or(1);
    if (n < 1 || n > 3) throw ConfigError("n must be in {1, 2, 3}");
    return WeightVector::uniform(n, Rational(1, 2));
}

SignatureSplit resolve_split(const RunConfig& cfg, int n) {
    SignatureSplit s;
    if (cfg.p && cfg.q)
        s = {*cfg.p, *cfg.q};
    else if (cfg.p)
        s = {*cfg.p, n - *cfg.p};
    else if (cfg.q)
        s = {n - *cfg.q, *cfg.q};
    else if (n == 1)
        s = {1, 0};
    else if (n == 2)
        s = {1, 1};
    else
        s = {2, 1};
    bharm::validate_split(s, n);
    return s;
}

QuadSpec resolve_spec(const RunConfig& cfg) {
    QuadSpec spec;
    if (cfg.nodes) spec.nodes_per_axis = *cfg.nodes;
    if (cfg.radius) spec.truncation_radius = *cfg.radius;
    if (cfg.eps_text)
        spec.regularization_schedule =
            parse_double_list(*cfg.eps_text, "eps schedule");
    spec.validate();
    return spec;
}

class Output {
public:
    explicit Output(const std::optional<std::string>& path) {
        if (path && *path != "-") {
            file_.open(*path);
            if (!file_) throw ConfigError("cannot open output file '" + *path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// Row-major Cartesian product walk; last axis varies fastest. Row order is
// the grid order independent of any evaluation scheduling.
void write_csv(std::ostream& os, const std::vector<std::vector<double>>& axes,
               const std::function<double(std::span<const double>)>& f) {
    const int n = static_cast<int>(axes.size());
    for (int i = 0; i < n; ++i) os << "x" << (i + 1) << ",";
    os << "value\n";
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<double> x(static_cast<std::size_t>(n));
    int warnings = 0;
    for (;;) {
        for (int i = 0; i < n; ++i) x[i] = axes[i][idx[i]];
        std::string value;
        try {
            value = format17(f(x));
        } catch (const bharm::DomainError&) {
            value = "NA";
            ++warnings;
        }
        for (int i = 0; i < n; ++i) os << format17(x[i]) << ",";
        os << value << "\n";
        int axis = n - 1;
        while (axis >= 0 && ++idx[axis] == axes[axis].size()) {
            idx[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    if (warnings > 0)
        std::cerr << warnings << " grid point(s) outside the kernel domain, "
                  << "emitted as NA\n";
}

int cmd_eval(const RunConfig& cfg, const std::string& kernel) {
    const WeightVector v = resolve_weights(cfg);
    const int n = v.dim();
    const SignatureSplit split = resolve_split(cfg, n);
    const int k = cfg.k.value_or(1);
    if (k < 0) throw ConfigError("k must be >= 0");
    if (!cfg.grid) throw ConfigError("eval requires --grid");
    const auto axes = parse_grid(*cfg.grid, n);

    // Fail fast on parameter sets whose normalizing constant is degenerate;
    // per-point domain violations become NA rows instead.
    std::function<double(std::span<const double>)> f;
    if (kernel == "E") {
        if (bharm::s_coefficient(1, v).degenerate())
            throw ConfigError("degenerate kernel constant for this v");
        f = [&](std::span<const double> x) { return bharm::eval_E(x, v); };
    } else if (kernel == "S") {
        if (k < 1) throw ConfigError("kernel S requires k >= 1");
        if (bharm::s_coefficient(k, v).degenerate())
            throw ConfigError("degenerate kernel constant for this (k, v)");
        f = [&](std::span<const double> x) { return bharm::eval_S(k, x, v); };
    } else if (kernel == "R") {
        if (k < 1) throw ConfigError("kernel R requires k >= 1");
        if (bharm::const_Kn(k, v, split).degenerate())
            throw ConfigError(
                "degenerate cone normalizer for this (k, v, split)");
        f = [&](std::span<const double> x) {
            return bharm::eval_R(k, x, v, split);
        };
    } else if (kernel == "delta-image") {
        f = [&](std::span<const double> x) {
            return bharm::fb_diamond_delta(k, x, v, split);
        };
    } else if (kernel == "diamond-image") {
        if (k < 1) throw ConfigError("kernel diamond-image requires k >= 1");
        f = [&](std::span<const double> x) {
            return bharm::fb_diamond_kernel(k, x, v, split);
        };
    } else {
        throw ConfigError("unknown kernel '" + kernel +
                          "'; valid kernels: E, S, R, diamond-image, "
                          "delta-image");
    }

    Output out(cfg.out);
    write_csv(out.stream(), axes, f);
    return 0;
}

// Field spec grammar: gaussian(width) | powerlaw(alpha) | bump(center,width).
ScalarField parse_field(const std::string& spec, int n) {
    const auto open = spec.find('(');
    if (open == std::string::npos || spec.back() != ')')
        throw ConfigError("bad field spec '" + spec +
                          "'; expected name(args)");
    const std::string name = spec.substr(0, open);
    const std::vector<double> args = parse_double_list(
        spec.substr(open + 1, spec.size() - open - 2), "field argument");
    if (name == "gaussian") {
        if (args.size() != 1) throw ConfigError("gaussian takes (width)");
        if (!(args[0] > 0)) throw ConfigError("gaussian width must be > 0");
        return ScalarField::gaussian(n, args[0]);
    }
    if (name == "powerlaw") {
        if (args.size() != 1) throw ConfigError("powerlaw takes (alpha)");
        return ScalarField::power_radial(n, args[0]);
    }
    if (name == "bump") {
        if (args.size() != 2) throw ConfigError("bump takes (center, width)");
        if (!(args[1] > 0)) throw ConfigError("bump width must be > 0");
        std::vector<double> center(static_cast<std::size_t>(n), args[0]);
        return ScalarField::bump(n, center, args[1]);
    }
    throw ConfigError("unknown field '" + name +
                      "'; valid fields: gaussian(width), powerlaw(alpha), "
                      "bump(center,width)");
}

int cmd_transform(const RunConfig& cfg, const std::string& field_spec) {
    const WeightVector v = resolve_weights(cfg);
    const int n = v.dim();
    const QuadSpec spec = resolve_spec(cfg);
    if (!cfg.grid) throw ConfigError("transform requires --grid");
    const auto axes = parse_grid(*cfg.grid, n);
    const ScalarField f = parse_field(field_spec, n);

    Output out(cfg.out);
    write_csv(out.stream(), axes, [&](std::span<const double> x) {
        return bharm::fb_numeric(f, x, v, spec);
    });
    return 0;
}

ojson config_echo(const RunConfig& cfg, const std::string& command) {
    ojson echo;
    echo["command"] = command;
    if (cfg.n) echo["n"] = *cfg.n;
    if (cfg.v_text) echo["v"] = *cfg.v_text;
    if (cfg.p) echo["p"] = *cfg.p;
    if (cfg.q) echo["q"] = *cfg.q;
    if (cfg.k) echo["k"] = *cfg.k;
    if (cfg.nodes) echo["nodes"] = *cfg.nodes;
    if (cfg.radius) echo["radius"] = *cfg.radius;
    if (cfg.eps_text) echo["eps_schedule"] = *cfg.eps_text;
    if (cfg.suite) echo["suite"] = *cfg.suite;
    if (cfg.grid) echo["grid"] = *cfg.grid;
    if (cfg.out) echo["out"] = *cfg.out;
    return echo;
}

ojson report_json(const AuditReport& r) {
    ojson j;
    j["identity_id"] = r.identity_id;
    ojson params;
    for (const auto& [key, value] : r.parameters) params[key] = value;
    j["parameters"] = params;
    j["residual"] = r.residual;
    j["ratio"] = r.ratio ? ojson(*r.ratio) : ojson(nullptr);
    j["fitted_exponent"] =
        r.fitted_exponent ? ojson(*r.fitted_exponent) : ojson(nullptr);
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["runtime_ms"] = r.runtime_ms;
    j["note"] = r.note;
    return j;
}

int cmd_audit(const RunConfig& cfg) {
    if (!cfg.suite) throw ConfigError("audit requires --suite");
    AuditConfig ac;
    if (cfg.v_text) ac.v = WeightVector::parse(*cfg.v_text);
    if (cfg.n) {
        if (ac.v && ac.v->dim() != *cfg.n)
            throw ConfigError("--n disagrees with the dimension of --v");
        ac.n = *cfg.n;
    }
    if (cfg.p || cfg.q) {
        const int n = ac.v   ? ac.v->dim()
                      : ac.n ? *ac.n
                             : throw ConfigError(
                                   "--p/--q need --n or --v for context");
        ac.split = resolve_split(cfg, n);
    }
    if (cfg.k) ac.k = *cfg.k;
    if (cfg.nodes) ac.nodes = *cfg.nodes;
    if (cfg.radius) ac.radius = *cfg.radius;
    if (cfg.eps_text)
        ac.schedule = parse_double_list(*cfg.eps_text, "eps schedule");

    const std::vector<AuditReport> reports = bharm::run_suite(*cfg.suite, ac);

    bool aggregate = true;
    ojson arr = ojson::array();
    for (const AuditReport& r : reports) {
        aggregate = aggregate && r.pass;
        arr.push_back(report_json(r));
    }
    ojson doc;
    doc["schema_version"] = "1";
    doc["config_echo"] = config_echo(cfg, "audit");
    doc["reports"] = arr;
    doc["aggregate_pass"] = aggregate;

    Output out(cfg.out);
    out.stream() << doc.dump(2) << "\n";
    return aggregate ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{
        "Weighted Bessel harmonic analysis: kernel evaluation, "
        "Fourier-Bessel transforms and identity audits"};
    app.set_config("--config", "",
                   "Configuration file, 'key = value' lines with # comments; "
                   "command-line flags override file values");
    app.require_subcommand(1);

    app.add_option("--n", cfg.n, "Dimension (1..3)");
    app.add_option("--v", cfg.v_text,
                   "Per-axis weights, comma list (decimals or fractions)");
    app.add_option("--p", cfg.p, "Positive axes of the signature split");
    app.add_option("--q", cfg.q, "Negative axes of the signature split");
    app.add_option("--k", cfg.k, "Operator iterate");
    app.add_option("--nodes", cfg.nodes, "Quadrature nodes per axis");
    app.add_option("--radius", cfg.radius, "Quadrature truncation radius");
    app.add_option("--eps-schedule", cfg.eps_text,
                   "Damping strengths, comma list, strictly decreasing");
    app.add_option("--suite", cfg.suite, "Audit suite id");
    app.add_option("--out", cfg.out, "Output path (default stdout)");
    app.add_option("--grid", cfg.grid,
                   "Per-axis grid start:stop:count, axes joined by ';'");

    std::string kernel, field_spec;
    CLI::App* eval =
        app.add_subcommand("eval", "Evaluate a kernel on a grid to CSV");
    eval->add_option("kernel", kernel,
                     "Kernel name: E, S, R, diamond-image, delta-image")
        ->required();
    eval->fallthrough();
    CLI::App* transform = app.add_subcommand(
        "transform", "Fourier-Bessel transform of a built-in field to CSV");
    transform
        ->add_option("field", field_spec,
                     "gaussian(width) | powerlaw(alpha) | bump(center,width)")
        ->required();
    transform->fallthrough();
    CLI::App* audit =
        app.add_subcommand("audit", "Run an audit suite, JSON report");
    audit->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(cfg, kernel);
        if (transform->parsed()) return cmd_transform(cfg, field_spec);
        return cmd_audit(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const bharm::Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
