#pragma once

// Command-line driver: flat key=value run configs, function/family
// selectors, and CSV/JSON table output.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "walsh/counterexample.hpp"
#include "walsh/dyadic.hpp"
#include "walsh/weights.hpp"

namespace walsh::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kAssertionFailure = 3, kResourceCap = 4 };

struct RunConfig {
  std::string family = "log";
  double p = 0.5;
  double alpha_exp = 0.0;
  double beta_exp = 0.0;
  double c_const = 1.0;
  std::vector<std::int64_t> alphas;  // empty: default schedule
  int resolution_cap = Resolution::kMaxBits;
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::string out;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::string& path);
// Canonical text: every key in fixed order, shortest round-trip numbers.
std::string serialize(const RunConfig& cfg);
// Counterexample parameters named by a run config.
CounterexampleConfig to_counterexample(const RunConfig& rc);

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// "1,2,5" or "1..5"
std::vector<std::int64_t> parse_index_list(std::string_view text);

// fejer | log | cesaro:A | ualpha:A | vlog[:q0] | custom:path
WeightFamily parse_family(const std::string& spec);

// const:c | walsh:k | dirichlet:n | random | file:path
DyadicFunction parse_function(const std::string& spec, Resolution res, std::uint64_t seed);

// Reads one value per line, or the last column of a CSV with a header row.
// Lines starting with '#' are skipped.
std::vector<double> read_values(const std::string& path);

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::string summary;
};

// %.{precision}g rendering used by both encoders.
std::string format_number(double v, int precision);
void write_csv(std::ostream& os, const Table& t, int precision);
void write_json(std::ostream& os, const Table& t, int precision);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walsh::cli
