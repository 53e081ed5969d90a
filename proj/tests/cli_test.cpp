#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "walsh/errors.hpp"

using namespace walsh;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Data lines of a CSV document: header first, no '#' lines.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("walshlab_cli_test_" + name);
}

}  // namespace

TEST_CASE("transform of simple functions") {
  const Result c = invoke({"transform", "--f", "const:1", "--n", "3"});
  REQUIRE(c.code == cli::kOk);
  const auto rows = csv_rows(c.out);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == std::vector<std::string>{"index", "coefficient"});
  CHECK(rows[1][1] == "1");
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i][1] == "0");

  const auto w5 = csv_rows(invoke({"transform", "--f", "walsh:5", "--n", "4"}).out);
  for (std::size_t i = 1; i < w5.size(); ++i) CHECK(w5[i][1] == (i - 1 == 5 ? "1" : "0"));
}

TEST_CASE("transform round trip through a file") {
  const auto input = temp_path("input.txt");
  const auto spectrum = temp_path("spectrum.csv");
  const auto output = temp_path("output.csv");
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::vector<double> values(64);
  {
    std::ofstream f(input);
    for (double& v : values) {
      v = dist(rng);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g\n", v);
      f << buf;
    }
  }
  REQUIRE(invoke({"transform", "--f", input.string(), "--n", "6", "--precision", "17", "--out",
                  spectrum.string()}).code == cli::kOk);
  REQUIRE(invoke({"transform", "--f", "file:" + spectrum.string(), "--n", "6", "--inverse",
                  "--precision", "17", "--out", output.string()}).code == cli::kOk);
  const std::vector<double> back = cli::read_values(output.string());
  REQUIRE(back.size() == values.size());
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(std::abs(back[i] - values[i]) < 1e-11);
  std::filesystem::remove(input);
  std::filesystem::remove(spectrum);
  std::filesystem::remove(output);
}

TEST_CASE("kappa table") {
  const Result r = invoke({"kappa", "log", "vlog", "cesaro:0.5", "fejer"});
  REQUIRE(r.code == cli::kOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[1][0] == "log");
  CHECK(rows[1][1] == "0.125");
  CHECK(rows[2][1] == "0.36067376");
  CHECK(rows[3][3] == "0.561552813");
  CHECK(rows[4][2] == "false");
}

TEST_CASE("lemma2 command") {
  const Result r = invoke({"lemma2", "log", "1..4"});
  REQUIRE(r.code == cli::kOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].back() == "passed");

  const auto vac = csv_rows(invoke({"lemma2", "--family", "cesaro:0.7", "--alphas", "1,2"}).out);
  REQUIRE(vac.size() == 3);
  CHECK(vac[1].back() == "vacuous");

  const Result u = invoke({"lemma2", "ualpha:0.3", "1..3"});
  CHECK(u.code == cli::kOk);
  for (const auto& row : csv_rows(u.out)) {
    if (row[0] != "family") CHECK(row.back() == "passed");
  }
}

TEST_CASE("diverge exit codes") {
  const Result bad = invoke({"diverge", "--family", "log", "--p", "0.6", "--set", "alpha_exp=1",
                             "--alphas", "1,2"});
  CHECK(bad.code == cli::kConfigError);
  CHECK(bad.err.find("hypothesis") != std::string::npos);

  const Result cap = invoke({"diverge", "--family", "log", "--p", "0.5", "--alphas", "1,4",
                             "--set", "resolution_cap=8"});
  CHECK(cap.code == cli::kResourceCap);

  CHECK(invoke({"diverge", "--set", "nonsense=1"}).code == cli::kConfigError);
  CHECK(invoke({"diverge", "--family", "bogus"}).code == cli::kConfigError);
  CHECK(invoke({"diverge", "--config", temp_path("missing.cfg").string()}).code ==
        cli::kConfigError);

  const Result ok = invoke({"diverge", "--family", "log", "--p", "0.5", "--alphas", "1,4"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("# summary:") != std::string::npos);
}

TEST_CASE("JSON and CSV carry the same numbers") {
  const std::vector<std::string> base = {"diverge", "--family", "log", "--p", "0.75", "--alphas",
                                         "1,2,3"};
  std::vector<std::string> csv_args = base;
  std::vector<std::string> json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const Result csv = invoke(csv_args);
  const Result json = invoke(json_args);
  REQUIRE(csv.code == cli::kOk);
  REQUIRE(json.code == cli::kOk);

  const auto rows = csv_rows(csv.out);
  const auto doc = nlohmann::ordered_json::parse(json.out);
  REQUIRE(doc["rows"].size() + 1 == rows.size());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& obj = doc["rows"][i - 1];
    for (std::size_t c = 0; c < rows[0].size(); ++c) {
      const auto& v = obj[rows[0][c]];
      REQUIRE(v.is_number());
      CHECK(v.get<double>() == std::stod(rows[i][c]));
    }
  }
}

TEST_CASE("run config parsing") {
  const cli::RunConfig cfg = cli::parse_run_config(
      "# comment\nfamily = cesaro:0.25\np = 0.7\nalpha_exp = 0.25\nalphas = 1..3\n\nseed = 9\n");
  CHECK(cfg.family == "cesaro:0.25");
  CHECK(cfg.p == 0.7);
  CHECK(cfg.alpha_exp == 0.25);
  CHECK(cfg.alphas == std::vector<std::int64_t>{1, 2, 3});
  CHECK(cfg.seed == 9);
  CHECK(cfg.format == "csv");

  CHECK_THROWS_AS(cli::parse_run_config("colour = red\n"), ConfigError);
  CHECK_THROWS_AS(cli::parse_run_config("p = abc\n"), ConfigError);
  CHECK_THROWS_AS(cli::parse_run_config("p 0.5\n"), ConfigError);
  CHECK_THROWS_AS(cli::parse_index_list("3..1"), ConfigError);
  CHECK(cli::parse_index_list("2,5,9") == std::vector<std::int64_t>{2, 5, 9});
}

TEST_CASE("run config serialization round-trips") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<std::string> families = {"fejer", "log", "vlog", "cesaro:0.25", "ualpha:0.3"};
  for (int i = 0; i < 200; ++i) {
    cli::RunConfig cfg;
    cfg.family = families[rng() % families.size()];
    cfg.p = unit(rng);
    cfg.alpha_exp = unit(rng);
    cfg.beta_exp = 3.0 * unit(rng);
    cfg.c_const = 1e-3 + unit(rng);
    const std::size_t k = rng() % 5;
    std::int64_t a = 0;
    for (std::size_t j = 0; j < k; ++j) cfg.alphas.push_back(a += 1 + static_cast<std::int64_t>(rng() % 4));
    cfg.resolution_cap = 1 + static_cast<int>(rng() % 24);
    cfg.format = (rng() % 2) ? "csv" : "json";
    cfg.seed = rng();
    REQUIRE(cli::parse_run_config(cli::serialize(cfg)) == cfg);
  }
}

TEST_CASE("family selectors") {
  CHECK(cli::parse_family("log").describe() == "log");
  CHECK(cli::parse_family("cesaro:0.5").describe() == "cesaro:0.5");
  CHECK(cli::parse_family("vlog").describe() == "vlog");
  CHECK_THROWS_AS(cli::parse_family("cesaro"), ConfigError);
  CHECK_THROWS_AS(cli::parse_family("cesaro:x"), ConfigError);
  CHECK_THROWS_AS(cli::parse_family("nope"), ConfigError);
}

TEST_CASE("number formatting") {
  CHECK(cli::format_number(0.125, 9) == "0.125");
  CHECK(cli::format_number(1.0 / 3.0, 9) == "0.333333333");
  CHECK(cli::format_number(-2.0, 9) == "-2");
}
