#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "walsh/counterexample.hpp"
#include "walsh/errors.hpp"
#include "walsh/lemma.hpp"
#include "walsh/norlund.hpp"
#include "walsh/transform.hpp"

namespace walsh::cli {

CounterexampleConfig to_counterexample(const RunConfig& rc) {
  CounterexampleConfig cfg;
  cfg.p = rc.p;
  cfg.weights = parse_family(rc.family);
  cfg.alpha_exp = rc.alpha_exp;
  cfg.beta_exp = rc.beta_exp;
  cfg.c_const = rc.c_const;
  cfg.resolution_cap = rc.resolution_cap;
  cfg.alphas = rc.alphas;
  return cfg;
}

namespace {

// Flags shared by the table-producing subcommands.
struct OutputOptions {
  std::string out;
  std::string format = "csv";
  int precision = 9;
};

void add_output_flags(CLI::App* sub, OutputOptions& o) {
  sub->add_option("--out", o.out, "Output path (default stdout)");
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--precision", o.precision, "Significant digits for floating-point output")
      ->check(CLI::Range(1, 17));
}

void emit(const Table& t, const OutputOptions& o, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw ConfigError("cannot write '" + o.out + "'");
    os = &file;
  }
  if (o.format == "json") {
    write_json(*os, t, o.precision);
  } else {
    write_csv(*os, t, o.precision);
  }
}

Resolution checked_resolution(int bits) {
  if (bits > Resolution::kMaxBits) {
    throw ResourceError("resolution " + std::to_string(bits) + " exceeds cap " +
                        std::to_string(Resolution::kMaxBits));
  }
  if (bits < 1) throw ConfigError("--n must be >= 1");
  return Resolution(bits);
}

Table value_table(const DyadicFunction& f, const std::string& column) {
  Table t;
  t.columns = {"index", column};
  for (std::size_t i = 0; i < f.size(); ++i) {
    t.rows.push_back({static_cast<std::int64_t>(i), f[i]});
  }
  return t;
}

int cmd_transform(const std::string& fspec, int bits, bool inverse, std::uint64_t seed,
                  const OutputOptions& o, std::ostream& out) {
  const Resolution res = checked_resolution(bits);
  const DyadicFunction input = parse_function(fspec, res, seed);
  Table t;
  if (inverse) {
    const std::vector<double> c(input.values().begin(), input.values().end());
    t = value_table(fwht_inverse(WalshSpectrum(res, c)), "value");
  } else {
    const WalshSpectrum s = fwht_forward(input);
    t.columns = {"index", "coefficient"};
    for (std::size_t k = 0; k < s.size(); ++k) t.rows.push_back({static_cast<std::int64_t>(k), s[k]});
  }
  emit(t, o, out);
  return kOk;
}

int cmd_kernels(int bits, std::optional<std::uint64_t> dirichlet, const std::string& family,
                std::uint64_t a, std::uint64_t b, const OutputOptions& o, std::ostream& out) {
  const Resolution res = checked_resolution(bits);
  Table t;
  if (dirichlet) {
    if (*dirichlet < 1 || *dirichlet > res.cells()) {
      throw ConfigError("--dirichlet must lie in [1, 2^N]");
    }
    const DirichletKernel d = dirichlet_kernel(*dirichlet, res);
    t.columns = {"index", "value"};
    for (std::size_t i = 0; i < d.values().size(); ++i) {
      t.rows.push_back({static_cast<std::int64_t>(i), d[i]});
    }
    t.meta.push_back({"kernel", "D_" + std::to_string(*dirichlet)});
  } else {
    if (a < 1 || a > b || b > res.cells()) throw ConfigError("kernel sum needs 1 <= a <= b <= 2^N");
    WeightFamily w = parse_family(family);
    w.ensure(b + 1);
    t = value_table(kernel_sum(w, a, b, res), "value");
    t.meta.push_back({"kernel", "sum_{j=a}^{b} q_{b-j} D_j"});
    t.meta.push_back({"family", w.describe()});
    t.meta.push_back({"a", static_cast<std::int64_t>(a)});
    t.meta.push_back({"b", static_cast<std::int64_t>(b)});
  }
  emit(t, o, out);
  return kOk;
}

int cmd_mean(const std::string& fspec, int bits, const std::string& family, std::uint64_t n,
             bool naive, std::uint64_t seed, const OutputOptions& o, std::ostream& out) {
  const Resolution res = checked_resolution(bits);
  if (n < 1 || n > res.cells()) throw ConfigError("--index must lie in [1, 2^N]");
  const DyadicFunction f = parse_function(fspec, res, seed);
  WeightFamily w = parse_family(family);
  w.ensure(n + 1);
  const DyadicFunction t_n =
      naive ? norlund_mean_naive(f, n, w) : norlund_mean_multiplier(fwht_forward(f), n, w);
  Table t = value_table(t_n, "value");
  t.meta.push_back({"family", w.describe()});
  t.meta.push_back({"n", static_cast<std::int64_t>(n)});
  t.meta.push_back({"path", std::string(naive ? "naive" : "multiplier")});
  emit(t, o, out);
  return kOk;
}

int cmd_kappa(std::vector<std::string> families, const OutputOptions& o, std::ostream& out) {
  if (families.empty()) families = {"fejer", "log", "vlog", "cesaro:0.5", "ualpha:0.3"};
  Table t;
  t.meta.push_back({"cesaro_threshold", cesaro_kappa_threshold()});
  t.meta.push_back({"ualpha_threshold", ualpha_kappa_threshold()});
  t.columns = {"family", "kappa", "positive", "threshold"};
  for (const std::string& spec : families) {
    const WeightFamily w = parse_family(spec);
    const KappaReport k = kappa(w);
    Cell threshold = std::string();
    if (std::holds_alternative<family::Cesaro>(w.kind())) threshold = cesaro_kappa_threshold();
    if (std::holds_alternative<family::UAlpha>(w.kind())) threshold = ualpha_kappa_threshold();
    t.rows.push_back({w.describe(), k.kappa, k.positive, threshold});
  }
  emit(t, o, out);
  return kOk;
}

int cmd_lemma2(std::vector<std::string> families, const std::string& range, int bits,
               const OutputOptions& o, std::ostream& out, std::ostream& err) {
  if (families.empty()) families = {"log"};
  const std::vector<std::int64_t> alphas = parse_index_list(range);
  Table t;
  t.columns = {"family", "alpha_k", "N", "min_abs_kernel", "kappa", "passed", "status"};
  bool ok = true;
  for (const std::string& spec : families) {
    const WeightFamily w = parse_family(spec);
    for (std::int64_t a : alphas) {
      if (a < 1) throw ConfigError("alpha_k must be >= 1");
      if (std::max<std::int64_t>(bits, 2 * a + 1) > Resolution::kMaxBits) {
        throw ResourceError("alpha_k = " + std::to_string(a) + " exceeds resolution cap");
      }
      try {
        const Lemma2Report r = lemma2_check(w, a, bits);
        const char* status = !r.passed ? "failed" : (r.vacuous() ? "vacuous" : "passed");
        ok = ok && r.passed;
        t.rows.push_back({r.family, a, static_cast<std::int64_t>(r.resolution), r.min_abs_kernel,
                          r.kappa, r.passed, std::string(status)});
      } catch (const PreconditionError& e) {
        ok = false;
        err << "lemma2: " << e.what() << '\n';
        t.rows.push_back({w.describe(), a, static_cast<std::int64_t>(2 * a + 1),
                          std::numeric_limits<double>::quiet_NaN(), kappa(w).kappa, false,
                          std::string("precondition")});
      }
    }
  }
  emit(t, o, out);
  return ok ? kOk : kAssertionFailure;
}

int cmd_diverge(const RunConfig& rc, const OutputOptions& o, std::ostream& out,
                std::ostream& err) {
  CounterexampleConfig cfg = to_counterexample(rc);
  if (cfg.alphas.empty()) cfg.alphas = default_schedule(cfg);
  try {
    cfg.validate();
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
  const ConditionsReport cond = check_conditions(cfg);
  if (const auto bad = ConditionsReport::first_failure(cond.cond4); bad >= 0) {
    throw ConfigError("infeasible alpha schedule: condition (4) fails at k = " +
                      std::to_string(bad));
  }
  const int needed = 2 * static_cast<int>(cfg.alphas.back()) + 1;
  if (needed > std::min(cfg.resolution_cap, Resolution::kMaxBits)) {
    throw ResourceError("schedule needs resolution " + std::to_string(needed) +
                        " beyond cap " + std::to_string(cfg.resolution_cap));
  }
  const DivergenceReport report = divergence_experiment(cfg);
  const JigReport jig = check_jig(cfg, std::int64_t{1} << needed);

  Table t;
  t.meta.push_back({"family", cfg.weights.describe()});
  t.meta.push_back({"p", cfg.p});
  t.meta.push_back({"alpha_exp", cfg.alpha_exp});
  t.meta.push_back({"beta_exp", cfg.beta_exp});
  t.meta.push_back({"c_const", cfg.c_const});
  t.meta.push_back({"kappa", report.kappa});
  t.meta.push_back({"gate_constant_q1_q3_1.5q5", cond.gate_constant});
  t.meta.push_back({"theory_constant", report.theory_constant});
  t.meta.push_back({"theory_constant_formula", std::string("c_const * 2^-3 * (1/4)^(1/p)")});
  t.meta.push_back({"cond3_partial", cond.cond3_partial});
  t.meta.push_back({"cond5_first_failure", ConditionsReport::first_failure(cond.cond5)});
  t.meta.push_back({"cond5_kappa_first_failure", ConditionsReport::first_failure(cond.cond5_kappa)});
  t.meta.push_back({"jig_best_C", jig.best_C});
  t.meta.push_back({"jig_best_C_subsequence", jig.best_C_subsequence});
  t.columns = {"k", "N", "weak_lp", "pointwise_floor", "theory_bound", "hardy_estimate", "ratio",
               "floor_bound"};
  bool row_invariant = true;
  for (const DivergenceRow& r : report.rows) {
    t.rows.push_back({static_cast<std::int64_t>(r.k), static_cast<std::int64_t>(r.resolution_used),
                      r.weak_lp_value, r.pointwise_floor, r.theory_bound, r.hardy_estimate,
                      r.ratio(), r.floor_bound});
    row_invariant = row_invariant &&
                    r.weak_lp_value >= r.pointwise_floor * std::pow(0.25, 1.0 / cfg.p) * (1 - 1e-12);
  }
  const bool floors = report.floors_respected();
  std::ostringstream summary;
  summary << "ratio_strictly_increasing=" << (report.ratios_strictly_increasing() ? "true" : "false")
          << " weak_strictly_increasing=" << (report.weak_strictly_increasing() ? "true" : "false")
          << " floors_respected=" << (floors ? "true" : "false")
          << " weak_dominates_floor=" << (row_invariant ? "true" : "false");
  t.summary = summary.str();
  emit(t, o, out);
  if (!floors || !row_invariant) {
    err << "diverge: row invariant violated (" << t.summary << ")\n";
    return kAssertionFailure;
  }
  return kOk;
}

int cmd_monitor(const std::string& fspec, int bits, const std::string& family, double p,
                std::uint64_t seed, const OutputOptions& o, std::ostream& out) {
  const Resolution res = checked_resolution(bits);
  const DyadicFunction f = parse_function(fspec, res, seed);
  const WeightFamily w = parse_family(family);
  Table t;
  t.meta.push_back({"family", w.describe()});
  t.meta.push_back({"p", p});
  t.columns = {"n", "ratio"};
  for (const MonitorPoint& m : bounded_case_monitor(f, w, p)) {
    t.rows.push_back({static_cast<std::int64_t>(m.n), m.ratio});
  }
  emit(t, o, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walsh–Fourier summability laboratory", "walshlab"};
  app.require_subcommand(1);

  OutputOptions o;
  int bits = 8;
  std::string fspec = "random";
  std::string family = "log";
  std::uint64_t seed = 0;
  double p = 1.0;

  auto* transform = app.add_subcommand("transform", "Walsh–Paley spectrum of a function");
  bool inverse = false;
  transform->add_option("--f", fspec, "const:c | walsh:k | dirichlet:n | random | file:path");
  transform->add_option("--n", bits, "Resolution N (2^N cells)");
  transform->add_option("--seed", seed);
  transform->add_flag("--inverse", inverse, "Treat the input as a spectrum and synthesize");
  add_output_flags(transform, o);

  auto* kernels = app.add_subcommand("kernels", "Dirichlet kernels and weighted kernel sums");
  std::optional<std::uint64_t> dirichlet;
  std::uint64_t a = 1, b = 1;
  kernels->add_option("--n", bits);
  kernels->add_option("--dirichlet", dirichlet, "Dump D_n");
  kernels->add_option("--family", family);
  kernels->add_option("--a", a);
  kernels->add_option("--b", b);
  add_output_flags(kernels, o);

  auto* mean = app.add_subcommand("mean", "Nörlund mean t_n f");
  std::uint64_t index = 1;
  bool naive = false;
  mean->add_option("--f", fspec);
  mean->add_option("--n", bits);
  mean->add_option("--family", family);
  mean->add_option("--index", index, "Order n of t_n");
  mean->add_option("--seed", seed);
  mean->add_flag("--naive", naive, "Use the literal weighted sum of partial sums");
  add_output_flags(mean, o);

  auto* kappa_cmd = app.add_subcommand("kappa", "Kernel lower-bound constant q_1 - 1.5 q_3");
  std::vector<std::string> families;
  kappa_cmd->add_option("--family,families", families);
  add_output_flags(kappa_cmd, o);

  auto* lemma = app.add_subcommand("lemma2", "Exhaustive kernel lower-bound check");
  std::vector<std::string> lemma_families;
  std::string range = "1..4";
  int lemma_bits = 0;
  lemma->add_option("--family", lemma_families);
  lemma->add_option("--alphas", range, "alpha_k list or range, e.g. 1..4");
  lemma->add_option("--n", lemma_bits, "Resolution (default minimal 2 alpha_k + 1)");
  std::vector<std::string> lemma_positional;
  lemma->add_option("args", lemma_positional, "[family] [range]")->expected(0, 2);
  add_output_flags(lemma, o);

  auto* diverge = app.add_subcommand("diverge", "Counterexample divergence experiment");
  std::string config_path;
  std::vector<std::string> sets;
  std::optional<std::string> ov_family, ov_alphas;
  std::optional<double> ov_p;
  diverge->add_option("--config", config_path, "Flat key = value config file");
  diverge->add_option("--set", sets, "Override key=value (repeatable)");
  diverge->add_option("--family", ov_family);
  diverge->add_option("--p", ov_p);
  diverge->add_option("--alphas", ov_alphas);
  add_output_flags(diverge, o);

  auto* monitor = app.add_subcommand("monitor", "Bounded-regime ratios ||t_{2^n} f||_p / ||f||_Hp");
  monitor->add_option("--f", fspec);
  monitor->add_option("--n", bits);
  monitor->add_option("--family", family);
  monitor->add_option("--p", p);
  monitor->add_option("--seed", seed);
  add_output_flags(monitor, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "walshlab: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (transform->parsed()) return cmd_transform(fspec, bits, inverse, seed, o, out);
    if (kernels->parsed()) return cmd_kernels(bits, dirichlet, family, a, b, o, out);
    if (mean->parsed()) return cmd_mean(fspec, bits, family, index, naive, seed, o, out);
    if (kappa_cmd->parsed()) return cmd_kappa(families, o, out);
    if (lemma->parsed()) {
      for (const std::string& arg : lemma_positional) {
        if (arg.find("..") != std::string::npos || (!arg.empty() && std::isdigit(arg[0]))) {
          range = arg;
        } else {
          lemma_families.push_back(arg);
        }
      }
      return cmd_lemma2(lemma_families, range, lemma_bits, o, out, err);
    }
    if (diverge->parsed()) {
      RunConfig rc = config_path.empty() ? RunConfig{} : load_run_config(config_path);
      for (const std::string& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--set expects key=value");
        apply_setting(rc, kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (ov_family) apply_setting(rc, "family", *ov_family);
      if (ov_p) rc.p = *ov_p;
      if (ov_alphas) apply_setting(rc, "alphas", *ov_alphas);
      if (diverge->count("--format") == 0) o.format = rc.format;
      if (o.out.empty()) o.out = rc.out;
      return cmd_diverge(rc, o, out, err);
    }
    if (monitor->parsed()) return cmd_monitor(fspec, bits, family, p, seed, o, out);
  } catch (const ResourceError& e) {
    err << "walshlab: resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ConfigError& e) {
    err << "walshlab: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const PreconditionError& e) {
    err << "walshlab: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "walshlab: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "walshlab: config error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace walsh::cli
