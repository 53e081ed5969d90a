#include "walsh/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "walsh/errors.hpp"
#include "walsh/norlund.hpp"
#include "walsh/norms.hpp"
#include "walsh/transform.hpp"

namespace walsh {
namespace {

// log2 of 2^{2 alpha / p} / sqrt(alpha)
double log2_block_mass(double p, std::int64_t alpha) {
  const double a = static_cast<double>(alpha);
  return 2.0 * a / p - 0.5 * std::log2(a);
}

double log2_sum(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

double subsequence_prefix(const WeightFamily& w, std::int64_t alpha_k) {
  return w.prefix_sum_extended(std::exp2(2.0 * static_cast<double>(alpha_k) + 1.0));
}

// Whether (const / Q) 2^{2 a_k (1/p - 1) - 3} / a_k exceeds the previous block mass.
bool block_gap_holds(double constant, double log2_prev, double p, std::int64_t alpha_k,
                     double q_sub) {
  if (!(constant > 0.0)) return false;
  const double a = static_cast<double>(alpha_k);
  const double rhs = std::log2(constant) - std::log2(q_sub) + 2.0 * a * (1.0 / p - 1.0) - 3.0 -
                     std::log2(a);
  return log2_prev < rhs;
}

}  // namespace

void CounterexampleConfig::validate() const {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("p must lie in (0, 1)");
  if (!(alpha_exp >= 0.0 && alpha_exp <= 1.0)) throw PreconditionError("alpha must lie in [0, 1]");
  if (!(beta_exp >= 0.0)) throw PreconditionError("beta must be >= 0");
  if (!(c_const > 0.0)) throw PreconditionError("C must be > 0");
  if (!(p < 1.0 / (1.0 + alpha_exp))) {
    throw PreconditionError("hypothesis violated: p = " + std::to_string(p) +
                            " must be < 1/(1+alpha) = " + std::to_string(1.0 / (1.0 + alpha_exp)));
  }
  if (alphas.empty()) throw PreconditionError("alpha schedule is empty");
  if (alphas.front() < 1) throw PreconditionError("alpha_0 must be >= 1");
  for (std::size_t k = 1; k < alphas.size(); ++k) {
    if (alphas[k] <= alphas[k - 1]) {
      throw PreconditionError("alpha schedule must be strictly increasing at k = " +
                              std::to_string(k));
    }
  }
  const KappaReport kr = kappa(weights);
  if (!kr.positive) {
    throw PreconditionError("kappa = q_1 - 1.5 q_3 = " + std::to_string(kr.kappa) +
                            " is not positive for " + weights.describe());
  }
}

int block_resolution(std::int64_t alpha_k) { return static_cast<int>(2 * alpha_k + 1); }

double block_coefficient(double p, std::int64_t alpha_k) {
  const double a = static_cast<double>(alpha_k);
  return std::exp2(2.0 * a * (1.0 / p - 1.0)) / std::sqrt(a);
}

DyadicFunction atom_block(std::size_t k, const CounterexampleConfig& cfg, Resolution res) {
  if (k >= cfg.alphas.size()) throw ArgumentError("block index beyond schedule");
  const int m = static_cast<int>(2 * cfg.alphas[k]);
  if (m + 1 > res.bits()) {
    throw DegreeError("block " + std::to_string(k) + " needs resolution " +
                      std::to_string(m + 1) + ", have " + std::to_string(res.bits()));
  }
  // D_{2^{m+1}} - D_{2^m} is 2^m on I_{m+1}, -2^m on I_m \ I_{m+1}, 0 elsewhere.
  const double height = std::exp2(static_cast<double>(m) * (1.0 / cfg.p - 1.0) + m);
  const std::uint64_t in_m = (std::uint64_t{1} << m) - 1;
  const std::uint64_t bit_m = std::uint64_t{1} << m;
  std::vector<double> v(res.cells(), 0.0);
  for (std::uint64_t x = 0; x < v.size(); ++x) {
    if ((x & in_m) != 0) continue;
    v[x] = (x & bit_m) ? -height : height;
  }
  return DyadicFunction(res, std::move(v));
}

DyadicFunction build_prefix_martingale(const CounterexampleConfig& cfg, std::size_t last,
                                       Resolution res) {
  if (last >= cfg.alphas.size()) throw ArgumentError("prefix beyond schedule");
  DyadicFunction f(res);
  for (std::size_t k = 0; k <= last; ++k) {
    f += (1.0 / std::sqrt(static_cast<double>(cfg.alphas[k]))) * atom_block(k, cfg, res);
  }
  return f;
}

DyadicFunction build_martingale(const CounterexampleConfig& cfg) {
  if (cfg.alphas.empty()) throw ArgumentError("martingale needs at least one block");
  const std::int64_t top = cfg.alphas.back();
  const int cap = std::min(cfg.resolution_cap, Resolution::kMaxBits);
  if (top < 1 || 2 * top + 1 > cap) {
    throw ResourceError("block alpha = " + std::to_string(top) + " needs resolution " +
                        std::to_string(2 * top + 1) + " beyond cap " + std::to_string(cap));
  }
  return build_prefix_martingale(cfg, cfg.alphas.size() - 1, Resolution(block_resolution(top)));
}

std::vector<double> atomic_coefficients(const CounterexampleConfig& cfg) {
  std::vector<double> mus;
  mus.reserve(cfg.alphas.size());
  for (std::int64_t a : cfg.alphas) mus.push_back(1.0 / std::sqrt(static_cast<double>(a)));
  return mus;
}

std::int64_t ConditionsReport::first_failure(const std::vector<bool>& flags) {
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (!flags[i]) return static_cast<std::int64_t>(i + 1);
  }
  return -1;
}

ConditionsReport check_conditions(const CounterexampleConfig& cfg) {
  ConditionsReport r;
  r.kappa = kappa(cfg.weights).kappa;
  r.gate_constant = block_gap_constant(cfg.weights);
  for (std::int64_t a : cfg.alphas) r.cond3_partial += std::pow(static_cast<double>(a), -cfg.p / 2.0);

  double log2_running = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < cfg.alphas.size(); ++k) {
    const double here = log2_block_mass(cfg.p, cfg.alphas[k]);
    if (k > 0) {
      r.cond4.push_back(log2_running < here);
      const double prev = log2_block_mass(cfg.p, cfg.alphas[k - 1]);
      const double q_sub = subsequence_prefix(cfg.weights, cfg.alphas[k]);
      r.cond5.push_back(block_gap_holds(r.gate_constant, prev, cfg.p, cfg.alphas[k], q_sub));
      r.cond5_kappa.push_back(block_gap_holds(r.kappa, prev, cfg.p, cfg.alphas[k], q_sub));
    }
    log2_running = log2_sum(log2_running, here);
  }
  return r;
}

JigReport check_jig(const CounterexampleConfig& cfg, std::int64_t n_max) {
  if (n_max < 2) throw ArgumentError("check_jig needs n_max >= 2");
  const KappaReport kr = kappa(cfg.weights);
  if (!kr.positive) {
    throw PreconditionError("kappa = " + std::to_string(kr.kappa) +
                            " <= 0: the growth condition is vacuous for " +
                            cfg.weights.describe());
  }
  WeightFamily w = cfg.weights;
  w.ensure(static_cast<std::uint64_t>(n_max) + 1);

  const auto scaled = [&](double n, double q_n) {
    return kr.kappa * std::pow(n, cfg.alpha_exp) * std::pow(std::log(n), cfg.beta_exp) / q_n;
  };
  JigReport r;
  r.best_C = std::numeric_limits<double>::infinity();
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const double c = scaled(static_cast<double>(n), w.prefix_sum(static_cast<std::uint64_t>(n)));
    if (c < r.best_C) {
      r.best_C = c;
      r.worst_n = n;
    }
  }
  r.holds = r.best_C >= cfg.c_const;

  r.best_C_subsequence = std::numeric_limits<double>::infinity();
  for (std::int64_t a : cfg.alphas) {
    const double n = std::exp2(2.0 * static_cast<double>(a) + 1.0);
    r.best_C_subsequence = std::min(r.best_C_subsequence, scaled(n, subsequence_prefix(w, a)));
  }
  r.holds_on_subsequence = r.best_C_subsequence >= cfg.c_const;
  return r;
}

bool DivergenceReport::ratios_strictly_increasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].ratio() > rows[i - 1].ratio())) return false;
  }
  return true;
}

bool DivergenceReport::weak_strictly_increasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].weak_lp_value > rows[i - 1].weak_lp_value)) return false;
  }
  return true;
}

bool DivergenceReport::floors_respected() const {
  return std::all_of(rows.begin(), rows.end(), [](const DivergenceRow& r) {
    return r.pointwise_floor >= r.floor_bound;
  });
}

DivergenceReport divergence_experiment(const CounterexampleConfig& cfg) {
  cfg.validate();
  DivergenceReport report;
  report.conditions = check_conditions(cfg);
  if (const auto bad = ConditionsReport::first_failure(report.conditions.cond4); bad >= 0) {
    throw PreconditionError("block growth condition fails at k = " + std::to_string(bad));
  }
  const int cap = std::min(cfg.resolution_cap, Resolution::kMaxBits);
  if (2 * cfg.alphas.back() + 1 > cap) {
    throw ResourceError("schedule needs resolution " + std::to_string(2 * cfg.alphas.back() + 1) +
                        " beyond cap " + std::to_string(cap));
  }

  WeightFamily w = cfg.weights;
  w.ensure((std::uint64_t{1} << block_resolution(cfg.alphas.back())) + 1);
  report.kappa = kappa(w).kappa;
  report.theory_constant = cfg.c_const * std::exp2(-3.0) * std::pow(0.25, 1.0 / cfg.p);

  const std::vector<double> mus = atomic_coefficients(cfg);
  for (std::size_t k = 0; k < cfg.alphas.size(); ++k) {
    const std::int64_t alpha_k = cfg.alphas[k];
    const double a = static_cast<double>(alpha_k);
    const Resolution res(block_resolution(alpha_k));
    const std::uint64_t n = res.cells();

    const DyadicFunction f = build_prefix_martingale(cfg, k, res);
    const DyadicFunction t = norlund_mean_multiplier(fwht_forward(f), n, w);

    DivergenceRow row;
    row.k = k;
    row.resolution_used = res.bits();
    row.weak_lp_value = weak_lp(t, cfg.p).value;
    row.pointwise_floor = std::numeric_limits<double>::infinity();
    for (std::uint64_t x = 0; x < n; ++x) {
      if (kUpperQuarterCell.contains(static_cast<std::uint32_t>(x))) {
        row.pointwise_floor = std::min(row.pointwise_floor, std::abs(t[x]));
      }
    }
    const double scale = report.kappa / w.prefix_sum(n);
    row.floor_bound = scale * block_coefficient(cfg.p, alpha_k) -
                      scale * std::exp2(2.0 * a * (1.0 / cfg.p - 1.0) - 3.0) / a;
    row.theory_bound = report.theory_constant *
                       std::exp2(2.0 * a * (1.0 / cfg.p - 1.0 - cfg.alpha_exp)) /
                       std::pow(a, cfg.beta_exp + 1.0);
    row.hardy_estimate = hardy_norm_estimate(f, cfg.p).value;
    row.atomic_estimate =
        atomic_norm_estimate(std::span<const double>(mus.data(), k + 1), cfg.p).value;
    report.rows.push_back(row);
  }
  return report;
}

std::vector<std::int64_t> default_schedule(const CounterexampleConfig& base, int max_bits) {
  const std::int64_t top = (max_bits - 1) / 2;
  for (std::int64_t a0 = 1; a0 <= top; ++a0) {
    CounterexampleConfig cfg = base;
    cfg.alphas.clear();
    for (std::int64_t a = a0; a <= top; a *= 4) cfg.alphas.push_back(a);
    const ConditionsReport r = check_conditions(cfg);
    if (ConditionsReport::first_failure(r.cond4) < 0 &&
        ConditionsReport::first_failure(r.cond5) < 0) {
      return cfg.alphas;
    }
  }
  throw PreconditionError("no feasible alpha schedule within " + std::to_string(max_bits) +
                          " bits");
}

std::vector<MonitorPoint> bounded_case_monitor(const DyadicFunction& f, const WeightFamily& w,
                                               double p) {
  const double hardy = hardy_norm_estimate(f, p).value;
  const WalshSpectrum s = fwht_forward(f);
  WeightFamily cached = w;
  cached.ensure(f.size() + 1);
  std::vector<MonitorPoint> out;
  for (int n = 0; n <= f.resolution().bits(); ++n) {
    const DyadicFunction t = norlund_mean_multiplier(s, std::uint64_t{1} << n, cached);
    out.push_back(MonitorPoint{n, lp_quasinorm(t, p).value / hardy});
  }
  return out;
}

}  // namespace walsh
