#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "walsh/errors.hpp"
#include "walsh/transform.hpp"

namespace walsh::cli {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(what + ": not a number: '" + text + "'");
  }
  return v;
}

template <class Int>
Int to_integer(const std::string& text, const std::string& what) {
  Int v{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(what + ": not an integer: '" + text + "'");
  }
  return v;
}

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

std::vector<std::int64_t> parse_index_list(std::string_view text) {
  const std::string t = trim(text);
  std::vector<std::int64_t> out;
  if (t.empty()) return out;
  if (const auto dots = t.find(".."); dots != std::string::npos) {
    const auto lo = to_integer<std::int64_t>(trim(t.substr(0, dots)), "range start");
    const auto hi = to_integer<std::int64_t>(trim(t.substr(dots + 2)), "range end");
    if (hi < lo) throw ConfigError("empty range '" + t + "'");
    for (auto a = lo; a <= hi; ++a) out.push_back(a);
    return out;
  }
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_integer<std::int64_t>(trim(item), "list entry"));
  return out;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "family") {
    parse_family(value);  // validate eagerly
    cfg.family = value;
  } else if (key == "p") {
    cfg.p = to_double(value, key);
  } else if (key == "alpha_exp") {
    cfg.alpha_exp = to_double(value, key);
  } else if (key == "beta_exp") {
    cfg.beta_exp = to_double(value, key);
  } else if (key == "c_const") {
    cfg.c_const = to_double(value, key);
  } else if (key == "alphas") {
    cfg.alphas = parse_index_list(value);
  } else if (key == "resolution_cap") {
    cfg.resolution_cap = to_integer<int>(value, key);
  } else if (key == "format") {
    if (value != "csv" && value != "json") throw ConfigError("format must be csv or json");
    cfg.format = value;
  } else if (key == "seed") {
    cfg.seed = to_integer<std::uint64_t>(value, key);
  } else if (key == "out") {
    cfg.out = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

RunConfig parse_run_config(std::string_view text) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_setting(cfg, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    } catch (const std::exception& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string serialize(const RunConfig& cfg) {
  std::string s;
  s += "family = " + cfg.family + "\n";
  s += "p = " + shortest(cfg.p) + "\n";
  s += "alpha_exp = " + shortest(cfg.alpha_exp) + "\n";
  s += "beta_exp = " + shortest(cfg.beta_exp) + "\n";
  s += "c_const = " + shortest(cfg.c_const) + "\n";
  s += "alphas = " + join(cfg.alphas) + "\n";
  s += "resolution_cap = " + std::to_string(cfg.resolution_cap) + "\n";
  s += "format = " + cfg.format + "\n";
  s += "seed = " + std::to_string(cfg.seed) + "\n";
  s += "out = " + cfg.out + "\n";
  return s;
}

WeightFamily parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  try {
    if (name == "fejer" && arg.empty()) return WeightFamily::fejer();
    if (name == "log" && arg.empty()) return WeightFamily::logarithmic();
    if (name == "cesaro" && !arg.empty()) return WeightFamily::cesaro(to_double(arg, spec));
    if (name == "ualpha" && !arg.empty()) return WeightFamily::ualpha(to_double(arg, spec));
    if (name == "vlog") {
      return arg.empty() ? WeightFamily::vlog() : WeightFamily::vlog(to_double(arg, spec));
    }
    if (name == "custom" && !arg.empty()) return WeightFamily::custom(read_values(arg), arg);
  } catch (const ArgumentError& e) {
    throw ConfigError("family '" + spec + "': " + e.what());
  }
  throw ConfigError("unknown family '" + spec +
                    "' (expected fejer|log|cesaro:A|ualpha:A|vlog[:q0]|custom:path)");
}

std::vector<double> read_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::vector<double> values;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto comma = body.rfind(',');
    const std::string field = trim(comma == std::string::npos ? body : body.substr(comma + 1));
    if (first && comma != std::string::npos) {
      double ignored;
      const char* end = field.data() + field.size();
      if (std::from_chars(field.data(), end, ignored).ec != std::errc()) {
        first = false;
        continue;  // header row
      }
    }
    first = false;
    values.push_back(to_double(field, path));
  }
  return values;
}

DyadicFunction parse_function(const std::string& spec, Resolution res, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  if (name == "const" && !arg.empty()) return DyadicFunction::constant(res, to_double(arg, spec));
  if (name == "walsh" && !arg.empty()) {
    const auto k = to_integer<std::uint64_t>(arg, spec);
    if (k >= res.cells()) throw ConfigError("walsh index beyond 2^N");
    return walsh_function(k, res);
  }
  if (name == "dirichlet" && !arg.empty()) {
    const auto n = to_integer<std::uint64_t>(arg, spec);
    if (n < 1 || n > res.cells()) throw ConfigError("dirichlet order outside [1, 2^N]");
    return dirichlet_kernel(n, res).to_function();
  }
  if (name == "random" && arg.empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(res.cells());
    for (double& x : v) x = dist(rng);
    return DyadicFunction(res, std::move(v));
  }
  const std::string path = name == "file" ? arg : spec;
  std::vector<double> v = read_values(path);
  if (v.size() != res.cells()) {
    throw ConfigError("'" + path + "' holds " + std::to_string(v.size()) + " values, need " +
                      std::to_string(res.cells()));
  }
  return DyadicFunction(res, std::move(v));
}

}  // namespace walsh::cli
