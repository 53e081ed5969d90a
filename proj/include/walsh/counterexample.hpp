#pragma once

// The divergence construction for subsequences t_{2^n} of Nörlund means.
//
// f = sum_k lambda_k a_k with lambda_k = alpha_k^{-1/2} and p-atoms
// a_k = 2^{2 alpha_k (1/p - 1)} (D_{2^{2 alpha_k + 1}} - D_{2^{2 alpha_k}}),
// so the Walsh spectrum is constant on each dyadic block
// [2^{2 alpha_k}, 2^{2 alpha_k + 1}) and zero elsewhere.

#include <cstdint>
#include <vector>

#include "walsh/dyadic.hpp"
#include "walsh/weights.hpp"

namespace walsh {

struct CounterexampleConfig {
  double p = 0.5;
  WeightFamily weights = WeightFamily::logarithmic();
  double alpha_exp = 0.0;  // growth exponent alpha in kappa/Q_n >= C / (n^alpha log^beta n)
  double beta_exp = 0.0;
  double c_const = 1.0;
  std::vector<std::int64_t> alphas;  // block indices alpha_0 < alpha_1 < ...
  int resolution_cap = Resolution::kMaxBits;

  std::size_t size() const { return alphas.size(); }
  // Throws PreconditionError naming the violated hypothesis.
  void validate() const;
};

// Resolution 2 alpha_k + 1 at which block k is exactly represented.
int block_resolution(std::int64_t alpha_k);

// 2^{2 alpha_k (1/p - 1)} / sqrt(alpha_k): the spectrum value on block k.
double block_coefficient(double p, std::int64_t alpha_k);

DyadicFunction atom_block(std::size_t k, const CounterexampleConfig& cfg, Resolution res);

// Blocks 0..last at the given resolution.
DyadicFunction build_prefix_martingale(const CounterexampleConfig& cfg, std::size_t last,
                                       Resolution res);
// All blocks at resolution 2 alpha_{K-1} + 1.
DyadicFunction build_martingale(const CounterexampleConfig& cfg);

std::vector<double> atomic_coefficients(const CounterexampleConfig& cfg);

struct ConditionsReport {
  double cond3_partial = 0.0;  // sum_k alpha_k^{-p/2}
  // Entry i concerns block k = i + 1.
  std::vector<bool> cond4;
  std::vector<bool> cond5;        // gate constant q_1 - q_3 - (3/2) q_5
  std::vector<bool> cond5_kappa;  // same inequality with kappa = q_1 - (3/2) q_3
  double gate_constant = 0.0;
  double kappa = 0.0;

  // Block index of the first failure, or -1.
  static std::int64_t first_failure(const std::vector<bool>& flags);
};

ConditionsReport check_conditions(const CounterexampleConfig& cfg);

struct JigReport {
  bool holds = false;
  double best_C = 0.0;
  std::int64_t worst_n = 0;
  // Same check restricted to n = 2^{2 alpha_k + 1}.
  bool holds_on_subsequence = false;
  double best_C_subsequence = 0.0;
};

JigReport check_jig(const CounterexampleConfig& cfg, std::int64_t n_max);

struct DivergenceRow {
  std::size_t k = 0;
  int resolution_used = 0;
  double weak_lp_value = 0.0;
  double pointwise_floor = 0.0;  // min |t f| over I_2(e_0 + e_1)
  double floor_bound = 0.0;      // lower bound the floor must clear
  double theory_bound = 0.0;
  double hardy_estimate = 0.0;
  double atomic_estimate = 0.0;

  double ratio() const { return weak_lp_value / hardy_estimate; }
};

struct DivergenceReport {
  std::vector<DivergenceRow> rows;
  ConditionsReport conditions;
  double kappa = 0.0;
  // theory_bound = theory_constant * 2^{2 alpha_k (1/p - 1 - alpha)} / alpha_k^{beta + 1}
  // with theory_constant = C * 2^-3 * (1/4)^{1/p}.
  double theory_constant = 0.0;

  bool ratios_strictly_increasing() const;
  bool weak_strictly_increasing() const;
  bool floors_respected() const;
};

// Rows are evaluated at n = 2^{2 alpha_k + 1} on the prefix martingale
// through block k. Requires cond4 on the whole schedule.
DivergenceReport divergence_experiment(const CounterexampleConfig& cfg);

// alpha_k = alpha_0 4^k up to the bit cap, with the smallest alpha_0 whose
// schedule passes cond4 and cond5.
std::vector<std::int64_t> default_schedule(const CounterexampleConfig& base, int max_bits = 15);

struct MonitorPoint {
  int n = 0;  // evaluates t_{2^n}
  double ratio = 0.0;
};

// ||t_{2^n} f||_p / ||f||_{H_p} for 0 <= n <= N.
std::vector<MonitorPoint> bounded_case_monitor(const DyadicFunction& f, const WeightFamily& w,
                                               double p);

}  // namespace walsh
