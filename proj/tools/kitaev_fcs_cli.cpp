// Command-line front end. Talks to the engine exclusively through the C API.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kitaev_fcs.h"

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

// Failure carrying the process exit code mapped from a kfcs_status.
struct CliError : std::runtime_error {
    CliError(std::string msg, int code)
        : std::runtime_error(std::move(msg)), exit_code(code) {}
    int exit_code;
};

int exit_for(kfcs_status s) {
    switch (s) {
    case KFCS_OK:
        return 0;
    case KFCS_ERR_TAIL:
    case KFCS_ERR_BRANCH:
    case KFCS_ERR_STEP:
    case KFCS_ERR_SUPPORT:
    case KFCS_ERR_SINGULAR:
        return 2;
    case KFCS_ERR_CASE:
    case KFCS_ERR_PARITY:
        return 3;
    default:
        return 1;
    }
}

void check(kfcs_status s) {
    if (s != KFCS_OK)
        throw CliError(kfcs_last_error(), exit_for(s));
}

struct System {
    System() : handle(kfcs_system_create()) {
        if (!handle)
            throw CliError("failed to allocate system", 1);
    }
    ~System() { kfcs_system_destroy(handle); }
    System(const System&) = delete;
    System& operator=(const System&) = delete;

    void set(const std::string& key, double value) {
        check(kfcs_system_set(handle, key.c_str(), value));
    }
    double get(const std::string& key) const {
        double v = 0.0;
        check(kfcs_system_get(handle, key.c_str(), &v));
        return v;
    }

    kfcs_system* handle;
};

const std::vector<std::string>& all_keys() {
    static const std::vector<std::string> keys = {
        "n_sites", "mu",   "eta",     "delta",       "gamma_l", "gamma_r", "mu_l",
        "mu_r",    "beta", "d_omega", "half_window", "n_xi",    "workers"};
    return keys;
}

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw CliError("cannot parse " + what + " value '" + text + "'", 1);
    }
}

// Shared options: config file, inline overrides, output directory.
struct CommonOpts {
    std::string config;
    std::vector<std::string> sets;
    std::string out = ".";
};

void apply_key_value(System& sys, const std::string& line, const std::string& origin) {
    const auto eq = line.find('=');
    if (eq == std::string::npos)
        throw CliError(origin + ": expected key=value, got '" + line + "'", 1);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    const auto trim = [](std::string& s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    sys.set(key, parse_double(value, origin + " key " + key));
}

void configure(System& sys, const CommonOpts& opts) {
    if (const char* env = std::getenv("KITAEV_FCS_WORKERS"))
        sys.set("workers", parse_double(env, "KITAEV_FCS_WORKERS"));
    if (!opts.config.empty()) {
        std::ifstream in(opts.config);
        if (!in)
            throw CliError("cannot open config file " + opts.config, 1);
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.resize(hash);
            if (line.find_first_not_of(" \t") == std::string::npos)
                continue;
            apply_key_value(sys, line, opts.config);
        }
    }
    for (const auto& s : opts.sets)
        apply_key_value(sys, s, "--set");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const CommonOpts& opts, const std::string& name) {
    std::filesystem::create_directories(opts.out);
    const auto path = std::filesystem::path(opts.out) / name;
    std::ofstream out(path);
    if (!out)
        throw CliError("cannot write " + path.string(), 1);
    std::printf("writing %s\n", path.string().c_str());
    return out;
}

void write_meta(std::ofstream& out, const System& sys, const std::string& command) {
    out << "# kitaev-fcs " << kfcs_version() << "\n";
    out << "# command: " << command << "\n";
    for (const auto& key : all_keys())
        out << "# " << key << " = " << fmt(sys.get(key)) << "\n";
}

json parameters_json(const System& sys) {
    json j;
    for (const auto& key : all_keys())
        j[key] = sys.get(key);
    return j;
}

void write_report(const CommonOpts& opts, const json& report) {
    auto out = open_out(opts, "report.json");
    out << report.dump(2) << "\n";
}

struct Distribution {
    std::vector<long long> q;
    std::vector<double> p;
    std::vector<double> log_p;
    double tau = 0.0;

    std::size_t zero_index() const {
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] == 0)
                return i;
        throw CliError("distribution lacks a q = 0 entry", 2);
    }
};

Distribution fetch_distribution(System& sys) {
    Distribution d;
    int n = 0;
    check(kfcs_distribution(sys.handle, nullptr, nullptr, nullptr, &n));
    d.q.resize(static_cast<std::size_t>(n));
    d.p.resize(static_cast<std::size_t>(n));
    d.log_p.resize(static_cast<std::size_t>(n));
    check(kfcs_distribution(sys.handle, d.q.data(), d.p.data(), d.log_p.data(), &n));
    d.q.resize(static_cast<std::size_t>(n));
    d.p.resize(static_cast<std::size_t>(n));
    d.log_p.resize(static_cast<std::size_t>(n));
    check(kfcs_tau(sys.handle, &d.tau));
    return d;
}

void write_distribution_csv(std::ofstream& out, const Distribution& d) {
    out << "q,p,log_p,rate\n";
    for (std::size_t i = 0; i < d.q.size(); ++i) {
        out << d.q[i] << ',' << fmt(d.p[i]) << ',' << fmt(d.log_p[i]) << ','
            << fmt(-d.log_p[i] / d.tau) << "\n";
    }
}

// ln P(q) - ln P(-q) for every q > 0 with both sides resolved, plus the
// reference line affinity * q.
void write_asymmetry_csv(std::ofstream& out, const Distribution& d, double affinity) {
    out << "q,log_ratio,reference\n";
    const std::size_t zero = d.zero_index();
    for (std::size_t q = 1; q <= zero && zero + q < d.q.size(); ++q) {
        const double lp = d.log_p[zero + q];
        const double lm = d.log_p[zero - q];
        if (std::isnan(lp) || std::isnan(lm))
            continue;
        out << d.q[zero + q] << ',' << fmt(lp - lm) << ','
            << fmt(affinity * static_cast<double>(q)) << "\n";
    }
}

// Max over resolved charge pairs of |ln P(q) - ln P(-q) - affinity * q|,
// skipping pairs whose -ln P exceeds the cap where inversion noise dominates.
double distribution_residual(const Distribution& d, double affinity, double cap) {
    const std::size_t zero = d.zero_index();
    double worst = 0.0;
    bool any = false;
    for (std::size_t q = 1; q <= zero && zero + q < d.q.size(); ++q) {
        const double lp = d.log_p[zero + q];
        const double lm = d.log_p[zero - q];
        if (std::isnan(lp) || std::isnan(lm) || -lp > cap || -lm > cap)
            continue;
        any = true;
        worst = std::max(worst,
                         std::abs(lp - lm - affinity * static_cast<double>(q)));
    }
    if (!any)
        throw CliError("no resolved charge pairs below the rate cap", 2);
    return worst;
}

json xft_report_json(System& sys, double affinity_override) {
    double out[6] = {};
    check(kfcs_xft_report(sys.handle, affinity_override, out));
    json j;
    j["affinity_expected"] = out[0];
    j["slope_fitted"] = out[1];
    j["slope_stderr"] = out[2];
    j["gc_residual"] = out[3];
    j["parity_odd_mass"] = out[4];
    j["periodicity_residual"] = out[5];
    return j;
}

int run_cgf(const CommonOpts& opts, int n_points, double xi_max) {
    System sys;
    configure(sys, opts);
    auto csv = open_out(opts, "cgf.csv");
    write_meta(csv, sys, "cgf");
    csv << "xi,re_f,im_f\n";
    for (int i = 0; i < n_points; ++i) {
        const double xi = xi_max * i / n_points;
        double re = 0.0, im = 0.0;
        check(kfcs_cgf(sys.handle, xi, 0.0, &re, &im));
        csv << fmt(xi) << ',' << fmt(re) << ',' << fmt(im) << "\n";
    }
    json report;
    report["command"] = "cgf";
    report["parameters"] = parameters_json(sys);
    report["n_points"] = n_points;
    report["xi_max"] = xi_max;
    write_report(opts, report);
    return 0;
}

int run_dist(const CommonOpts& opts) {
    System sys;
    configure(sys, opts);
    const Distribution d = fetch_distribution(sys);
    auto csv = open_out(opts, "dist.csv");
    write_meta(csv, sys, "dist");
    write_distribution_csv(csv, d);
    json report;
    report["command"] = "dist";
    report["parameters"] = parameters_json(sys);
    report["tau"] = d.tau;
    report["n_charges"] = d.q.size();
    write_report(opts, report);
    return 0;
}

int run_cumulants(const CommonOpts& opts) {
    System sys;
    configure(sys, opts);
    double c[4] = {};
    check(kfcs_cumulants(sys.handle, c));
    auto csv = open_out(opts, "cumulants.csv");
    write_meta(csv, sys, "cumulants");
    csv << "order,rate\n";
    for (int i = 0; i < 4; ++i)
        csv << (i + 1) << ',' << fmt(c[i]) << "\n";
    std::printf("c1 = %s  c2 = %s  c3 = %s  c4 = %s\n", fmt(c[0]).c_str(),
                fmt(c[1]).c_str(), fmt(c[2]).c_str(), fmt(c[3]).c_str());
    json report;
    report["command"] = "cumulants";
    report["parameters"] = parameters_json(sys);
    report["cumulants"] = {c[0], c[1], c[2], c[3]};
    write_report(opts, report);
    return 0;
}

int run_xft_check(const CommonOpts& opts, double affinity_override) {
    System sys;
    configure(sys, opts);
    const json r = xft_report_json(sys, affinity_override);
    std::printf("affinity_expected    = %s\n", fmt(r["affinity_expected"].get<double>()).c_str());
    std::printf("slope_fitted         = %s\n", fmt(r["slope_fitted"].get<double>()).c_str());
    std::printf("slope_stderr         = %s\n", fmt(r["slope_stderr"].get<double>()).c_str());
    std::printf("gc_residual          = %s\n", fmt(r["gc_residual"].get<double>()).c_str());
    std::printf("parity_odd_mass      = %s\n", fmt(r["parity_odd_mass"].get<double>()).c_str());
    std::printf("periodicity_residual = %s\n", fmt(r["periodicity_residual"].get<double>()).c_str());
    json report;
    report["command"] = "xft-check";
    report["parameters"] = parameters_json(sys);
    report["xft"] = r;
    write_report(opts, report);
    return 0;
}

int run_oracle_check(const CommonOpts& opts, int samples, unsigned long long seed,
                     double tol) {
    struct Case {
        const char* tag;
        std::vector<std::pair<const char*, double>> forced;
    };
    const std::vector<Case> cases = {
        {"trivial3", {{"n_sites", 3}, {"delta", 0}}},
        {"pairing3", {{"n_sites", 3}, {"eta", 0}, {"delta", 1}}},
        {"pairing4", {{"n_sites", 4}, {"eta", 0}, {"delta", 1}}},
        {"majorana", {{"mu", 0}, {"eta", 1}, {"delta", 1}}},
        {"general3", {{"n_sites", 3}, {"mu", 1}, {"eta", 1}, {"delta", 1}}},
    };

    json results;
    double worst = 0.0;
    for (const auto& c : cases) {
        System sys;
        configure(sys, opts);
        for (const auto& [key, value] : c.forced)
            sys.set(key, value);
        double err = 0.0;
        check(kfcs_oracle_check(sys.handle, c.tag, samples, seed, &err));
        std::printf("%-9s max relative error %s over %d samples\n", c.tag,
                    fmt(err).c_str(), samples);
        results[c.tag] = err;
        worst = std::max(worst, err);
    }

    json report;
    report["command"] = "oracle-check";
    report["samples"] = samples;
    report["seed"] = seed;
    report["tolerance"] = tol;
    report["max_relative_error"] = results;
    write_report(opts, report);
    if (worst > tol) {
        std::fprintf(stderr, "error: worst deviation %s exceeds tolerance %s\n",
                     fmt(worst).c_str(), fmt(tol).c_str());
        return 2;
    }
    std::printf("all cases within %s\n", fmt(tol).c_str());
    return 0;
}

void apply_figure_preset(System& sys, int figure, int n_sites) {
    sys.set("n_sites", n_sites);
    sys.set("gamma_l", 0.3);
    sys.set("gamma_r", 0.3);
    sys.set("mu_l", 0.05);
    sys.set("mu_r", -0.05);
    sys.set("beta", 10.0);
    sys.set("d_omega", 0.01);
    sys.set("half_window", 0.0);
    switch (figure) {
    case 2:
        sys.set("mu", 1.0);
        sys.set("eta", 1.0);
        sys.set("delta", 0.0);
        break;
    case 3:
        sys.set("mu", 0.0);
        sys.set("eta", 0.0);
        sys.set("delta", 1.0);
        break;
    case 4:
        sys.set("mu", 0.0);
        sys.set("eta", 1.0);
        sys.set("delta", 1.0);
        break;
    case 5:
        sys.set("mu", 1.0);
        sys.set("eta", 1.0);
        sys.set("delta", 1.0);
        break;
    default:
        throw CliError("figure must be 2, 3, 4, or 5", 1);
    }
}

// One figure panel: rate and asymmetry tables plus the XFT summary.
json figure_panel(const CommonOpts& opts, System& sys, const std::string& stem,
                  const std::string& command) {
    const Distribution d = fetch_distribution(sys);
    {
        auto csv = open_out(opts, stem + "_rate.csv");
        write_meta(csv, sys, command);
        write_distribution_csv(csv, d);
    }
    const json xft = xft_report_json(sys, std::nan(""));
    {
        auto csv = open_out(opts, stem + "_asymmetry.csv");
        write_meta(csv, sys, command);
        write_asymmetry_csv(csv, d, xft["affinity_expected"].get<double>());
    }
    std::printf("%s: slope %s (expected affinity %s)\n", stem.c_str(),
                fmt(xft["slope_fitted"].get<double>()).c_str(),
                fmt(xft["affinity_expected"].get<double>()).c_str());
    return xft;
}

int run_figure(const CommonOpts& opts, int figure) {
    json report;
    report["command"] = "figure " + std::to_string(figure);

    if (figure == 3) {
        // Even and odd chain lengths behave differently; emit both.
        for (int n : {10, 11}) {
            System sys;
            configure(sys, opts);
            apply_figure_preset(sys, figure, n);
            const std::string stem = "fig3_n" + std::to_string(n);
            if (n % 2 == 0) {
                // The even chain's distribution is symmetric, so a slope fit
                // is meaningless; record the distribution and the cumulants.
                const Distribution d = fetch_distribution(sys);
                auto csv = open_out(opts, stem + "_rate.csv");
                write_meta(csv, sys, "figure 3");
                write_distribution_csv(csv, d);
                double c[4] = {};
                check(kfcs_cumulants(sys.handle, c));
                std::printf("%s: mean rate %s\n", stem.c_str(), fmt(c[0]).c_str());
                report[stem]["cumulants"] = {c[0], c[1], c[2], c[3]};
                report[stem]["parameters"] = parameters_json(sys);
            } else {
                report[stem]["xft"] = figure_panel(opts, sys, stem, "figure 3");
                report[stem]["parameters"] = parameters_json(sys);
            }
        }
        write_report(opts, report);
        return 0;
    }

    System sys;
    configure(sys, opts);
    apply_figure_preset(sys, figure, 10);
    const std::string stem = "fig" + std::to_string(figure);
    report["parameters"] = parameters_json(sys);
    report["xft"] = figure_panel(opts, sys, stem, "figure " + std::to_string(figure));

    if (figure == 4) {
        double g = 0.0;
        check(kfcs_majorana_conductance(sys.handle, 1e4, &g));
        std::printf("zero-bias conductance %s (quantized value %s)\n", fmt(g).c_str(),
                    fmt(1.0 / kPi).c_str());
        report["conductance"] = g;
        report["conductance_quantized"] = 1.0 / kPi;
    }
    if (figure == 5) {
        // No single channel is exact here; record the distribution-level
        // residual against each pure affinity. The per-pair comparison grows
        // with q, so a weak admixture stands out even when the summed log
        // residual stays small.
        const double beta = sys.get("beta");
        const double mu_l = sys.get("mu_l");
        const double mu_r = sys.get("mu_r");
        const double pure[3] = {beta * (mu_l - mu_r), beta * (mu_l + mu_r),
                                beta * mu_l};
        const char* names[3] = {"direct", "crossed_pair", "local_pair"};
        const Distribution d = fetch_distribution(sys);
        for (int i = 0; i < 3; ++i) {
            const double r = distribution_residual(d, pure[i], 25.0);
            report["pure_affinity_residuals"][names[i]] = r;
            std::printf("distribution residual vs %s affinity %s: %s\n", names[i],
                        fmt(pure[i]).c_str(), fmt(r).c_str());
        }
    }
    write_report(opts, report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Full counting statistics of a Kitaev chain between biased reservoirs"};
    app.require_subcommand(1);

    CommonOpts opts;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opts.config, "flat key=value parameter file");
        cmd->add_option("--set", opts.sets, "inline parameter override key=value")
            ->take_all();
        cmd->add_option("--out", opts.out, "output directory (default .)");
    };

    auto* cgf = app.add_subcommand("cgf", "sample the cumulant generating function");
    int n_points = 64;
    double xi_max = 2.0 * kPi;
    cgf->add_option("--points", n_points, "number of xi samples")
        ->check(CLI::PositiveNumber);
    cgf->add_option("--xi-max", xi_max, "sweep endpoint (exclusive)")
        ->check(CLI::PositiveNumber);
    add_common(cgf);

    auto* dist = app.add_subcommand("dist", "charge distribution and rate function");
    add_common(dist);

    auto* cum = app.add_subcommand("cumulants", "first four cumulant rates");
    add_common(cum);

    auto* xft = app.add_subcommand("xft-check", "fluctuation-theorem report");
    double affinity_override = std::nan("");
    xft->add_option("--affinity", affinity_override,
                    "override the automatic affinity");
    add_common(xft);

    auto* oracle = app.add_subcommand("oracle-check",
                                      "compare the kernel against the closed forms");
    int samples = 200;
    unsigned long long seed = 20260817ULL;
    double tol = 1e-8;
    oracle->add_option("--samples", samples, "draws per case")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed, "random seed");
    oracle->add_option("--tol", tol, "acceptance threshold")
        ->check(CLI::PositiveNumber);
    add_common(oracle);

    auto* figure = app.add_subcommand("figure", "run a preset parameter study");
    int figure_index = 0;
    figure->add_option("index", figure_index, "2, 3, 4, or 5")->required();
    add_common(figure);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cgf->parsed())
            return run_cgf(opts, n_points, xi_max);
        if (dist->parsed())
            return run_dist(opts);
        if (cum->parsed())
            return run_cumulants(opts);
        if (xft->parsed())
            return run_xft_check(opts, affinity_override);
        if (oracle->parsed())
            return run_oracle_check(opts, samples, seed, tol);
        if (figure->parsed())
            return run_figure(opts, figure_index);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
