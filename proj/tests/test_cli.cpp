#include "doctest.h"

#include <cli.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace betawalk;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("betawalk_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("grid parsing") {
    auto g = cli::parse_grid("0.05:0.45:0.05");
    REQUIRE(g.size() == 9);
    CHECK(g.back() == 0.45);
    CHECK(cli::parse_grid("1,2.5,-3").size() == 3);
    CHECK(cli::parse_grid("7").size() == 1);
    CHECK_THROWS(cli::parse_grid("1:0:0.1"));
    CHECK_THROWS(cli::parse_grid("1:2"));
    CHECK_THROWS(cli::parse_grid("a,b"));
    CHECK(cli::format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("rate table") {
    auto r = run({"rate", "--alpha", "1", "--beta", "1", "--theta", "0.05:0.45:0.05"});
    CHECK(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == std::vector<std::string>{"theta", "x_theta", "rate_I", "sigma"});
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) < std::stod(rows[i - 1][1]));
    CHECK(nlohmann::json::parse(r.err)["command"] == "rate");

    CHECK(run({"rate", "--alpha", "0.5", "--beta", "0.5", "--theta", "0.6"}).code == 2);

    auto dir = scratch("rate");
    const std::string path = (dir / "rate.csv").string();
    CHECK(run({"rate", "--out", path}).code == 0);
    const std::string first = slurp(path);
    CHECK(run({"rate", "--out", path}).code == 0);
    CHECK(slurp(path) == first);
    CHECK(fs::exists(path + ".manifest.json"));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"rate", "--theta", "x"}).code == 2);
    CHECK(run({"verify", "unknown"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verification suites and the fault hook") {
    auto dir = scratch("verify");
    const std::string js = (dir / "steep.json").string();
    CHECK(run({"verify", "steep", "--json", js}).code == 0);
    auto doc = nlohmann::json::parse(slurp(js));
    CHECK(doc["pass"] == true);
    for (const auto& s : doc["suites"]) {
        CHECK(s.contains("min_margin"));
        CHECK(s["min_margin"].get<double>() > 0);
    }
    CHECK(run({"verify", "steep", "--inject-fault"}).code == 1);
    CHECK(run({"verify", "polygamma"}).code == 0);
    auto m = run({"verify", "moments", "--r", "0.6"});
    CHECK(m.code == 0);
    auto mj = nlohmann::json::parse(m.err);
    CHECK(mj["k_min"] == 5);
    CHECK(mj["p_threshold_fraction"] == "6/5");
    CHECK(run({"verify", "moments", "--r", "1.5"}).code == 2);
}

TEST_CASE("Fredholm commands") {
    auto lap = run({"fredholm", "laplace", "--t", "8", "--x", "4", "--u", "-1"});
    CHECK(lap.code == 0);
    auto rows = csv_rows(lap.out);
    REQUIRE(rows.size() == 2);
    const double v = std::stod(rows[1][1]);
    CHECK(v > 0);
    CHECK(v < 1);
    CHECK(run({"fredholm", "laplace", "--t", "8", "--x", "3"}).code == 2);

    auto gue = run({"fredholm", "gue", "--y", "-3:1:0.5"});
    CHECK(gue.code == 0);
    rows = csv_rows(gue.out);
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) >= std::stod(rows[i - 1][1]));

    auto lim = run({"fredholm", "limit", "--y", "0"});
    CHECK(lim.code == 0);
    rows = csv_rows(lim.out);
    CHECK(std::abs(std::stod(rows[1][4])) < 1e-6);
}

TEST_CASE("simulate") {
    auto r = run({"simulate", "--t", "6", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(csv_rows(r.out).size() == 8);
    auto d = run({"simulate", "--kind", "dirichlet2d", "--dirichlet", "1,1,0.5,0.5", "--t", "5", "--y", "0,0.5"});
    CHECK(d.code == 0);
    CHECK(run({"simulate", "--kind", "lattice"}).code == 2);
}

TEST_CASE("experiment configs") {
    auto dir = scratch("exp");
    write(dir / "smoke.json",
          R"({"kind": "beta1d", "mode": "fixed", "alpha": 1, "beta": 1, "theta": 0.3, "t": [256], "n_samples": 50, "seed": 4})");
    const auto start = std::chrono::steady_clock::now();
    CHECK(run({"experiment", (dir / "smoke.json").string(), "--out-dir", (dir / "a").string()}).code == 0);
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 60);
    CHECK(run({"--threads", "3", "experiment", (dir / "smoke.json").string(), "--out-dir", (dir / "b").string()})
              .code == 0);
    CHECK(slurp(dir / "a" / "samples.csv") == slurp(dir / "b" / "samples.csv"));
    CHECK(slurp(dir / "a" / "ks.csv") == slurp(dir / "b" / "ks.csv"));
    auto rows = csv_rows(slurp(dir / "a" / "samples.csv"));
    CHECK(rows[0] == std::vector<std::string>{"t", "sample_index", "seed", "x_target", "log_tail_prob", "x_t_statistic"});
    CHECK(rows.size() == 51);
    CHECK(csv_rows(slurp(dir / "a" / "ks.csv"))[0] ==
          std::vector<std::string>{"t", "n_samples", "ks_distance", "sample_mean", "sample_sd"});
    auto manifest = nlohmann::json::parse(slurp(dir / "a" / "manifest.json"));
    CHECK(manifest["version"] == cli::kVersion);
    CHECK(manifest["config"]["seed"] == 4);

    write(dir / "power.json",
          R"({"mode": "power", "r": 0.3, "s": 0.3, "theta": 0.3, "t": "64:128:64", "n_samples": 50, "seed": 1})");
    CHECK(run({"experiment", (dir / "power.json").string(), "--out-dir", (dir / "c").string()}).code == 0);
    CHECK(nlohmann::json::parse(slurp(dir / "c" / "manifest.json"))["gcond_ok"] == true);

    write(dir / "planar.json",
          R"({"kind": "dirichlet2d", "mode": "power", "r": 0.6, "s": 0.6, "p": 1.2, "theta": 0.3, "t": [32], "n_samples": 50, "seed": 1})");
    CHECK(run({"experiment", (dir / "planar.json").string(), "--out-dir", (dir / "d").string()}).code == 0);

    write(dir / "unknown.json", R"({"mode": "fixed", "alpha": 1, "beta": 1, "theta": 0.3, "t": [8], "n_samples": 50, "seed": 1, "colour": 3})");
    CHECK(run({"experiment", (dir / "unknown.json").string()}).code == 2);
    write(dir / "badtype.json", R"({"mode": "fixed", "alpha": "one", "beta": 1, "theta": 0.3, "t": [8], "n_samples": 50, "seed": 1})");
    CHECK(run({"experiment", (dir / "badtype.json").string()}).code == 2);
    write(dir / "gcond.json", R"({"mode": "power", "r": 0.9, "s": 0.1, "theta": 0.3, "t": [8], "n_samples": 50, "seed": 1})");
    CHECK(run({"experiment", (dir / "gcond.json").string()}).code == 2);
    write(dir / "broken.json", "{not json");
    CHECK(run({"experiment", (dir / "broken.json").string()}).code == 2);
    CHECK(run({"experiment", (dir / "missing.json").string()}).code == 2);
}
