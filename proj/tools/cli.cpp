#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "betawalk/experiments.hpp"
#include "betawalk/fredholm.hpp"
#include "betawalk/moments.hpp"
#include "betawalk/parallel.hpp"
#include "betawalk/rate.hpp"
#include "betawalk/rwre.hpp"
#include "betawalk/steep.hpp"

namespace betawalk::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("not a number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    if (text.empty()) throw UsageError("empty grid");
    if (text.find(':') != std::string::npos) {
        auto p = split(text, ':');
        if (p.size() != 3) throw UsageError("grid must be start:stop:step, got '" + text + "'");
        const double a = parse_number(p[0]), b = parse_number(p[1]), h = parse_number(p[2]);
        if (!(h > 0) || b < a) throw UsageError("grid needs step > 0 and stop >= start: '" + text + "'");
        const double span = (b - a) / h;
        const long n = static_cast<long>(std::floor(span + 1e-9));
        if (n > 10000000) throw UsageError("grid too large: '" + text + "'");
        std::vector<double> out;
        for (long i = 0; i <= n; ++i) out.push_back(i == n && std::abs(span - n) < 1e-9 ? b : a + i * h);
        return out;
    }
    std::vector<double> out;
    for (const auto& part : split(text, ',')) out.push_back(parse_number(part));
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// CSV cell: integers stay integers, reals get 17 digits
struct Cell {
    std::string text;
    Cell(double v) : text(format_double(v)) {}
    Cell(int v) : text(std::to_string(v)) {}
    Cell(long long v) : text(std::to_string(v)) {}
    Cell(std::uint64_t v) : text(std::to_string(v)) {}
};

class CsvSink {
public:
    CsvSink(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot write '" + path + "'");
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    void row(const std::vector<Cell>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) *os_ << (i ? "," : "") << cells[i].text;
        *os_ << '\n';
    }
    void header(const std::vector<std::string>& names) {
        for (std::size_t i = 0; i < names.size(); ++i) *os_ << (i ? "," : "") << names[i];
        *os_ << '\n';
    }

private:
    std::ofstream file_;
    std::ostream* os_;
};

void emit_manifest(const std::string& command, const json& config, const std::string& out_path,
                   std::ostream& err, const json& extra = json::object()) {
    json m;
    m["tool"] = "betawalk";
    m["version"] = kVersion;
    m["command"] = command;
    m["config"] = config;
    for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
    if (out_path.empty()) {
        err << m.dump(2) << '\n';
        return;
    }
    std::ofstream f(out_path + ".manifest.json", std::ios::binary);
    if (!f) throw UsageError("cannot write manifest next to '" + out_path + "'");
    f << m.dump(2) << '\n';
}

// ---- rate ----------------------------------------------------------------

struct RateArgs {
    double alpha = 1, beta = 1;
    std::string thetas = "0.05:0.45:0.05";
    std::string out;
};

int cmd_rate(const RateArgs& a, std::ostream& out, std::ostream& err) {
    const auto thetas = parse_grid(a.thetas);
    for (double th : thetas) ModelParams{a.alpha, a.beta, th}.check_window();
    CsvSink csv(a.out, out);
    csv.header({"theta", "x_theta", "rate_I", "sigma"});
    for (double th : thetas) {
        const DriftPoint d = drift_point({a.alpha, a.beta, th});
        csv.row({d.theta, d.x_theta, d.rate_I, d.sigma});
    }
    emit_manifest("rate", {{"alpha", a.alpha}, {"beta", a.beta}, {"theta", a.thetas}, {"out", a.out}}, a.out, err);
    return kOk;
}

// ---- simulate ------------------------------------------------------------

struct SimulateArgs {
    std::string kind = "beta1d";
    double alpha = 1, beta = 1;
    std::string dirichlet = "1,1,1,1";
    int t = 16;
    std::uint64_t seed = 1;
    std::string ys = "0:0.5:0.25";
    std::string out;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
    if (a.t < 1) throw UsageError("--t must be positive");
    json cfg = {{"kind", a.kind}, {"t", a.t}, {"seed", a.seed}, {"out", a.out}};
    CsvSink csv(a.out, out);
    if (a.kind == "beta1d") {
        EnvSpec spec = EnvSpec::beta1d(a.alpha, a.beta, a.seed, a.t);
        spec.validate();
        QuenchedRow last;
        quenched_forward(spec, [&](const QuenchedRow& row) {
            if (row.t == a.t) last = row;
        });
        csv.header({"t", "x", "log_prob", "log_tail_prob"});
        for (std::size_t i = 0; i < last.log_probs.size(); ++i) {
            const int x = last.x_min + 2 * static_cast<int>(i);
            csv.row({a.t, x, last.log_probs[i], tail_logprob(last, x)});
        }
        cfg["alpha"] = a.alpha;
        cfg["beta"] = a.beta;
    } else if (a.kind == "dirichlet2d") {
        const auto w = parse_grid(a.dirichlet);
        if (w.size() != 4) throw UsageError("--dirichlet needs four weights (e1, e2, -e1, -e2)");
        EnvSpec spec = EnvSpec::dirichlet2d({w[0], w[1], w[2], w[3]}, a.seed, a.t);
        spec.validate();
        csv.header({"t", "y", "log_prob"});
        for (double y : parse_grid(a.ys)) csv.row({a.t, y, dirichlet_event_logprob(spec, a.t, y)});
        cfg["dirichlet"] = w;
        cfg["y"] = a.ys;
    } else {
        throw UsageError("--kind must be beta1d or dirichlet2d");
    }
    emit_manifest("simulate", cfg, a.out, err);
    return kOk;
}

// ---- fredholm ------------------------------------------------------------

struct FredholmArgs {
    std::string ys = "-4:2:0.5";
    int m = 80;
    int t = 8, x = 4;
    std::string us = "-0.5,-1,-5";
    double alpha = 1, beta = 1;
    double phi = 1.0471975511965976;  // pi/3
    std::string out;
};

int cmd_fredholm_gue(const FredholmArgs& a, std::ostream& out, std::ostream& err) {
    if (a.m < 4) throw UsageError("--m must be at least 4");
    CsvSink csv(a.out, out);
    csv.header({"y", "value", "err_est"});
    for (double y : parse_grid(a.ys)) {
        const auto r = f_gue(y, a.m);
        csv.row({y, r.value, r.err_est});
    }
    emit_manifest("fredholm gue", {{"y", a.ys}, {"m", a.m}, {"out", a.out}}, a.out, err);
    return kOk;
}

int cmd_fredholm_laplace(const FredholmArgs& a, std::ostream& out, std::ostream& err) {
    CsvSink csv(a.out, out);
    csv.header({"u", "value", "imag_residual", "err_est"});
    for (double u : parse_grid(a.us)) {
        LaplaceParams lp{a.t, a.x, u, a.alpha, a.beta};
        lp.validate();
        const auto r = laplace_transform(lp);
        csv.row({u, r.value, r.imag_residual, r.err_est});
    }
    emit_manifest("fredholm laplace",
                  {{"t", a.t}, {"x", a.x}, {"u", a.us}, {"alpha", a.alpha}, {"beta", a.beta}, {"out", a.out}},
                  a.out, err);
    return kOk;
}

int cmd_fredholm_limit(const FredholmArgs& a, std::ostream& out, std::ostream& err) {
    if (a.m < 4) throw UsageError("--m must be at least 4");
    if (!(a.phi > 0.5235987755982988 && a.phi < 1.5707963267948966)) throw UsageError("--phi must lie in (pi/6, pi/2)");
    CsvSink csv(a.out, out);
    csv.header({"y", "value", "err_est", "f_gue", "difference"});
    for (double y : parse_grid(a.ys)) {
        const auto r = limit_det(y, a.phi, a.m);
        const double g = f_gue(y).value;
        csv.row({y, r.value, r.err_est, g, r.value - g});
    }
    emit_manifest("fredholm limit", {{"y", a.ys}, {"phi", a.phi}, {"m", a.m}, {"out", a.out}}, a.out, err);
    return kOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string thetas, alphas, betas;
    int k_max = 4;
    bool inject_fault = false;
    std::string json_path;
    std::string r = "0.5";
};

json report_json(const SteepDescentReport& r) {
    json w = json::array();
    for (const auto& x : r.witnesses) w.push_back({{"point", x.point}, {"margin", x.margin}});
    return {{"suite", r.suite}, {"grid", r.grid}, {"min_margin", r.min_margin}, {"pass", r.pass}, {"witnesses", w}};
}

int finish_verify(const std::string& suite, const std::vector<SteepDescentReport>& reports, json extra,
                  const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    bool pass = true;
    json list = json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass;
        char line[160];
        std::snprintf(line, sizeof line, "%-22s min_margin %-24s %s", r.suite.c_str(),
                      format_double(r.min_margin).c_str(), r.pass ? "PASS" : "FAIL");
        out << line << '\n';
        if (!r.pass && !r.witnesses.empty()) out << "    worst at " << r.witnesses.front().point << '\n';
        list.push_back(report_json(r));
    }
    out << suite << ": " << (pass ? "all margins positive" : "violated inequality") << '\n';
    json doc = {{"tool", "betawalk"}, {"version", kVersion}, {"suite", suite}, {"pass", pass}, {"suites", list}};
    for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
    if (!a.json_path.empty()) {
        std::ofstream f(a.json_path, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + a.json_path + "'");
        f << doc.dump(2) << '\n';
    } else {
        err << doc.dump(2) << '\n';
    }
    return pass ? kOk : kVerifyFailed;
}

SteepGrid grid_from(const VerifyArgs& a) {
    SteepGrid g = SteepGrid::defaults();
    if (!a.thetas.empty()) g.thetas = parse_grid(a.thetas);
    if (!a.alphas.empty()) g.alphas = parse_grid(a.alphas);
    if (!a.betas.empty()) g.betas = parse_grid(a.betas);
    if (a.k_max < 1 || a.k_max > 8) throw UsageError("--k-max must lie in 1..8");
    g.k_max = a.k_max;
    for (double v : g.thetas)
        if (!(v > 0)) throw UsageError("thetas must be positive");
    for (double v : g.alphas)
        if (!(v > 0)) throw UsageError("alphas must be positive");
    for (double v : g.betas)
        if (!(v > 0)) throw UsageError("betas must be positive");
    return g;
}

int cmd_verify(const std::string& suite, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    VerifyOptions opt;
    opt.inject_fault = a.inject_fault;
    if (suite == "polygamma") {
        const SteepGrid g = grid_from(a);
        return finish_verify(suite, verify_polygamma_suite(g, opt), {{"grid", g.describe()}}, a, out, err);
    }
    if (suite == "steep") {
        const SteepGrid g = grid_from(a);
        return finish_verify(suite, verify_steep_descent(g, opt), {{"grid", g.describe()}}, a, out, err);
    }
    // moments
    Rational r;
    try {
        r = Rational::from_decimal(a.r);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (r.num <= 0 || r.num >= r.den) throw UsageError("--r must lie in (0, 1)");
    if (a.k_max < 2 || a.k_max > 8) throw UsageError("--k-max must lie in 2..8 for the moment suite");
    const DecayReport d = moment_decay_check(r, a.k_max);
    std::vector<SteepDescentReport> reports;
    for (const auto& row : d.rows) {
        SteepDescentReport rep;
        rep.suite = "decay_" + std::to_string(row.i1) + "_" + std::to_string(row.i2);
        rep.grid = "alpha = t^r, t in {1e2, 1e3, 1e4}";
        rep.min_margin = 0.5 - row.max_drift;
        rep.pass = row.bounded;
        reports.push_back(rep);
    }
    if (a.inject_fault && !reports.empty()) {
        reports.front().min_margin = -1;
        reports.front().pass = false;
    }
    out << "r = " << d.r.num << "/" << d.r.den << ": ceil(k/2) = " << d.half_order << ", minimal k = " << d.k_min
        << ", p threshold = " << d.p_threshold.num << "/" << d.p_threshold.den << '\n';
    json extra = {{"r", a.r},
                  {"half_order", d.half_order},
                  {"k_min", d.k_min},
                  {"p_threshold", format_double(d.p_threshold.value())},
                  {"p_threshold_fraction", std::to_string(d.p_threshold.num) + "/" + std::to_string(d.p_threshold.den)},
                  {"k_tta_text", d.k_tta_text},
                  {"k_tta_scaling", d.k_tta_scaling}};
    return finish_verify(suite, reports, extra, a, out, err);
}

// ---- experiment ----------------------------------------------------------

template <class T>
T get_typed(const json& j, const std::string& key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw UsageError("config key '" + key + "' has the wrong type");
    }
}

ExperimentConfig parse_experiment_config(const json& j, std::string& out_dir) {
    static const std::vector<std::string> known = {"kind", "mode", "alpha", "beta", "r",       "s",         "c1",
                                                   "c2",   "p",    "theta", "t",    "n_samples", "seed", "threads",
                                                   "out_dir"};
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw UsageError("unknown config key '" + it.key() + "'");
        if (it.value().is_object() || (it.value().is_array() && it.key() != "t"))
            throw UsageError("config is flat: '" + it.key() + "' must be a scalar");
    }
    for (const char* req : {"mode", "theta", "t", "n_samples", "seed"})
        if (!j.contains(req)) throw UsageError(std::string("missing config key '") + req + "'");

    ExperimentConfig c;
    const std::string kind = j.contains("kind") ? get_typed<std::string>(j, "kind") : "beta1d";
    if (kind == "beta1d")
        c.kind = EnvKind::Beta1D;
    else if (kind == "dirichlet2d")
        c.kind = EnvKind::Dirichlet2D;
    else
        throw UsageError("kind must be beta1d or dirichlet2d");

    const std::string mode = get_typed<std::string>(j, "mode");
    auto need = [&](const char* k) {
        if (!j.contains(k)) throw UsageError(std::string("mode '") + mode + "' needs key '" + k + "'");
        return get_typed<double>(j, k);
    };
    auto opt = [&](const char* k, double d) { return j.contains(k) ? get_typed<double>(j, k) : d; };
    if (mode == "fixed")
        c.schedule = Schedule::fixed(need("alpha"), need("beta"));
    else if (mode == "power")
        c.schedule = Schedule::power(need("r"), need("s"), opt("c1", 1), opt("c2", 1));
    else
        throw UsageError("mode must be fixed or power");

    c.theta = get_typed<double>(j, "theta");
    c.p = opt("p", 0);
    const json& tj = j.at("t");
    std::vector<double> ts;
    if (tj.is_string())
        ts = parse_grid(tj.get<std::string>());
    else if (tj.is_array())
        for (const auto& v : tj) {
            if (!v.is_number()) throw UsageError("config key 't' must hold numbers");
            ts.push_back(v.get<double>());
        }
    else if (tj.is_number())
        ts.push_back(tj.get<double>());
    else
        throw UsageError("config key 't' has the wrong type");
    for (double t : ts) {
        if (t != std::floor(t) || t < 1 || t > 1e6) throw UsageError("times must be integers in [1, 1e6]");
        c.ts.push_back(static_cast<int>(t));
    }
    c.n_samples = get_typed<int>(j, "n_samples");
    c.master_seed = get_typed<std::uint64_t>(j, "seed");
    c.threads = j.contains("threads") ? get_typed<int>(j, "threads") : 0;
    out_dir = j.contains("out_dir") ? get_typed<std::string>(j, "out_dir") : "";
    try {
        c.validate();
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return c;
}

int cmd_experiment(const std::string& path, std::string out_dir, int threads, std::ostream& out) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config '" + path + "'");
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    std::string cfg_dir;
    ExperimentConfig c = parse_experiment_config(j, cfg_dir);
    if (out_dir.empty()) out_dir = cfg_dir.empty() ? "." : cfg_dir;
    if (threads > 0) c.threads = threads;
    c.threads = resolve_threads(c.threads);
    fs::create_directories(out_dir);

    const ExperimentResult res = run_fluctuation_experiment(c);
    const std::string samples_path = (fs::path(out_dir) / "samples.csv").string();
    const std::string ks_path = (fs::path(out_dir) / "ks.csv").string();
    {
        CsvSink csv(samples_path, out);
        csv.header({"t", "sample_index", "seed", "x_target", "log_tail_prob", "x_t_statistic"});
        for (const auto& s : res.samples) csv.row({s.t, s.sample_index, s.seed, s.x_target, s.log_tail_prob, s.x_t});
    }
    {
        CsvSink csv(ks_path, out);
        csv.header({"t", "n_samples", "ks_distance", "sample_mean", "sample_sd"});
        for (const auto& k : res.ks) csv.row({k.t, k.n_samples, k.ks_distance, k.sample_mean, k.sample_sd});
    }
    json sched = json::array();
    for (const auto& v : res.schedule)
        sched.push_back({{"t", v.t},
                         {"alpha_t", v.alpha_t},
                         {"beta_t", v.beta_t},
                         {"sigma_t", v.sigma_t},
                         {"t_g", v.t_g},
                         {"sigma3_t", v.sigma3_t},
                         {"valid", v.valid}});
    json resolved = j;
    resolved["threads"] = c.threads;
    resolved["out_dir"] = out_dir;
    json m = {{"tool", "betawalk"},
              {"version", kVersion},
              {"command", "experiment"},
              {"config", resolved},
              {"as1_ok", c.schedule.as1_ok()},
              {"as2_ok", c.schedule.as2_ok()},
              {"gcond_ok", c.schedule.gcond_ok()},
              {"schedule", sched},
              {"outputs", {"samples.csv", "ks.csv"}}};
    std::ofstream mf(fs::path(out_dir) / "manifest.json", std::ios::binary);
    mf << m.dump(2) << '\n';
    for (const auto& k : res.ks)
        out << "t=" << k.t << " ks=" << format_double(k.ks_distance) << " mean=" << format_double(k.sample_mean)
            << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Beta random walks in random environment: rates, Fredholm determinants, verification"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: BETAWALK_THREADS or 1)")->check(CLI::NonNegativeNumber);

    RateArgs rate;
    auto* c_rate = app.add_subcommand("rate", "table of x(theta), I and sigma");
    c_rate->add_option("--alpha", rate.alpha);
    c_rate->add_option("--beta", rate.beta);
    c_rate->add_option("--theta", rate.thetas, "grid start:stop:step");
    c_rate->add_option("--out", rate.out, "CSV path (default stdout)");

    SimulateArgs sim;
    auto* c_sim = app.add_subcommand("simulate", "quenched probabilities in one environment");
    c_sim->add_option("--kind", sim.kind, "beta1d or dirichlet2d");
    c_sim->add_option("--alpha", sim.alpha);
    c_sim->add_option("--beta", sim.beta);
    c_sim->add_option("--dirichlet", sim.dirichlet, "weights for e1,e2,-e1,-e2");
    c_sim->add_option("--t", sim.t);
    c_sim->add_option("--seed", sim.seed);
    c_sim->add_option("--y", sim.ys, "event thresholds for dirichlet2d");
    c_sim->add_option("--out", sim.out);

    FredholmArgs fa;
    auto* c_fred = app.add_subcommand("fredholm", "Fredholm determinants");
    c_fred->require_subcommand(1);
    auto* c_gue = c_fred->add_subcommand("gue", "F_GUE on a grid");
    c_gue->add_option("--y", fa.ys);
    c_gue->add_option("--m", fa.m);
    c_gue->add_option("--out", fa.out);
    auto* c_lap = c_fred->add_subcommand("laplace", "E[exp(u P(t, x))] from the determinantal formula");
    c_lap->add_option("--t", fa.t);
    c_lap->add_option("--x", fa.x);
    c_lap->add_option("--u", fa.us);
    c_lap->add_option("--alpha", fa.alpha);
    c_lap->add_option("--beta", fa.beta);
    c_lap->add_option("--out", fa.out);
    auto* c_lim = c_fred->add_subcommand("limit", "det(I + K_y) against F_GUE");
    c_lim->add_option("--y", fa.ys);
    c_lim->add_option("--phi", fa.phi);
    c_lim->add_option("--m", fa.m);
    c_lim->add_option("--out", fa.out);

    VerifyArgs va;
    std::string suite;
    auto* c_ver = app.add_subcommand("verify", "inequality suites");
    c_ver->add_option("suite", suite, "polygamma | steep | moments")
        ->required()
        ->check(CLI::IsMember({"polygamma", "steep", "moments"}));
    c_ver->add_option("--thetas", va.thetas);
    c_ver->add_option("--alphas", va.alphas);
    c_ver->add_option("--betas", va.betas);
    c_ver->add_option("--k-max", va.k_max);
    c_ver->add_option("--r", va.r, "decay exponent for the moment suite");
    c_ver->add_flag("--inject-fault", va.inject_fault, "test hook: perturb one grid point");
    c_ver->add_option("--json", va.json_path, "JSON report path (default stderr)");

    std::string config_path, out_dir;
    auto* c_exp = app.add_subcommand("experiment", "Monte Carlo fluctuation experiment");
    c_exp->add_option("config", config_path)->required();
    c_exp->add_option("--out-dir", out_dir);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (c_rate->parsed()) return cmd_rate(rate, out, err);
        if (c_sim->parsed()) return cmd_simulate(sim, out, err);
        if (c_gue->parsed()) return cmd_fredholm_gue(fa, out, err);
        if (c_lap->parsed()) return cmd_fredholm_laplace(fa, out, err);
        if (c_lim->parsed()) return cmd_fredholm_limit(fa, out, err);
        if (c_ver->parsed()) return cmd_verify(suite, va, out, err);
        if (c_exp->parsed()) return cmd_experiment(config_path, out_dir, threads, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace betawalk::cli
