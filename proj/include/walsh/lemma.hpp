#pragma once

// Exhaustive desk-scale checks of the kernel lower bound and the Dirichlet
// kernel identities it rests on.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "walsh/dyadic.hpp"
#include "walsh/weights.hpp"

namespace walsh {

struct Lemma2Report {
  std::string family;
  std::int64_t alpha_k = 0;
  int resolution = 0;
  // min over I_2(e_0+e_1) of |sum_{j=2^{2a}}^{2^{2a+1}} q_{2^{2a+1}-j} D_j|
  double min_abs_kernel = 0.0;
  double kappa = 0.0;
  bool passed = false;

  bool vacuous() const { return kappa <= 0.0; }
};

inline constexpr double kLemmaSlack = 1e-12;

// Defaults to the minimal exact resolution 2 alpha_k + 1 when res_bits == 0.
Lemma2Report lemma2_check(const WeightFamily& w, std::int64_t alpha_k, int res_bits = 0);

// Telescoped coefficient gaps from the lower-bound argument:
// sum_{j=2^{2a-2}+1}^{2^{2a-1}-1} |q_{M-4j+3} - q_{M-4j+1}| with M = 2^{2a+1},
// together with its ceiling (q_3 - q_{2^{2a}-1}) / 2.
struct TelescopeCheck {
  double gap_sum = 0.0;
  double ceiling = 0.0;
  bool holds() const { return gap_sum <= ceiling + kLemmaSlack; }
};
TelescopeCheck telescope_check(const WeightFamily& w, std::int64_t alpha_k);

struct IdentityCheck {
  explicit IdentityCheck(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string first_failure;
};

struct IdentityReport {
  int resolution = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

// Checks, exhaustively at resolution N <= 8:
//   dyadic-power kernels D_{2^n} = 2^n 1_{I_n};
//   the binary-digit closed form of D_n against the running sum of w_k;
//   w_n(x + y) = w_n(x) w_n(y);
//   q_{n-2} + q_{n+2} >= 2 q_n for each supplied convex non-increasing family;
//   on I_2(e_0 + e_1), D_j = w_{j-1} for odd j and 0 for even j.
IdentityReport identity_suite(Resolution res, const std::vector<WeightFamily>& families);

}  // namespace walsh
