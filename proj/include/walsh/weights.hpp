#pragma once

// Nörlund weight sequences q_0, q_1, ... with cached prefix sums
// Q_n = q_0 + ... + q_{n-1}.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace walsh {

namespace family {
struct Fejer {};
struct Logarithmic {};
struct Cesaro {
  double alpha;
};
struct UAlpha {
  double alpha;
};
// q_j = 1/ln(j+1) for j >= 1 with a free q_0.
struct VLog {
  double q0;
};
struct Custom {
  std::vector<double> q;
  std::string label;
};
}  // namespace family

using WeightKind = std::variant<family::Fejer, family::Logarithmic, family::Cesaro,
                                family::UAlpha, family::VLog, family::Custom>;

// Cesàro number A_n^alpha = (alpha+1)...(alpha+n)/n!, A_0^alpha = 1.
double cesaro_A(std::int64_t n, double alpha);

// Smallest q_0 that keeps the VLog sequence convex at n = 1.
double vlog_default_q0();

class WeightFamily {
 public:
  static WeightFamily fejer();
  static WeightFamily logarithmic();
  static WeightFamily cesaro(double alpha);
  static WeightFamily ualpha(double alpha);
  static WeightFamily vlog(double q0 = vlog_default_q0());
  static WeightFamily custom(std::vector<double> q, std::string label = "custom");

  const WeightKind& kind() const { return kind_; }
  // Canonical selector text, e.g. "cesaro:0.5".
  std::string describe() const;

  double weight(std::int64_t j) const;
  // Q_n, exact summation (served from the cache when n <= horizon()).
  double prefix_sum(std::uint64_t n) const;
  // Q_n for n far beyond explicit summation: closed forms or an
  // Euler–Maclaurin tail past a summed anchor. Equals prefix_sum for small n.
  double prefix_sum_extended(double n) const;

  // Grow the cache to hold q_0..q_{horizon-1} and Q_0..Q_horizon.
  void ensure(std::uint64_t horizon);
  std::uint64_t horizon() const { return q_.size(); }
  // Largest j for which weight(j) is defined, or -1 if unbounded.
  std::int64_t max_index() const;

 private:
  explicit WeightFamily(WeightKind kind);
  double compute_weight(std::int64_t j) const;
  // q_j given q_{j-1}; lets Cesàro weights use their product recurrence.
  double next_weight(std::uint64_t j, double previous) const;

  WeightKind kind_;
  std::vector<double> q_;
  std::vector<double> prefix_{0.0};
};

struct StructureReport {
  bool non_increasing = false;
  bool convex = false;
  // q_{n-2} + q_{n+2} - 2 q_n >= 0
  bool second_gap = false;

  bool admissible() const { return non_increasing && convex; }
};

StructureReport validate_structure(const WeightFamily& w, std::int64_t n_max);

struct KappaReport {
  double kappa = 0.0;  // q_1 - (3/2) q_3
  bool positive = false;
};

KappaReport kappa(const WeightFamily& w);

// q_1 - q_3 - (3/2) q_5, the constant appearing in the growth condition on
// consecutive blocks of the counterexample.
double block_gap_constant(const WeightFamily& w);

// Positivity thresholds of kappa for the parametric families.
double cesaro_kappa_threshold();  // (sqrt(17) - 3) / 2
double ualpha_kappa_threshold();  // 2 - log2(3)

}  // namespace walsh
