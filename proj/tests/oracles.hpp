#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the transform, kernel or norm code under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace walsh::oracle {

inline int walsh_product(std::uint64_t n, std::uint64_t x) {
  // prod_k r_k(x)^{n_k}, one digit at a time
  int sign = 1;
  for (int k = 0; k < 64; ++k) {
    if (((n >> k) & 1u) && ((x >> k) & 1u)) sign = -sign;
  }
  return sign;
}

// f^(k) = 2^-N sum_i f(i) w_k(i), O(4^N).
inline std::vector<double> direct_analysis(const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<double> c(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) c[k] += f[i] * walsh_product(k, i);
    c[k] /= static_cast<double>(n);
  }
  return c;
}

// D_n(x) = sum_{k<n} w_k(x), literally.
inline std::int64_t naive_dirichlet(std::uint64_t n, std::uint64_t x) {
  std::int64_t s = 0;
  for (std::uint64_t k = 0; k < n; ++k) s += walsh_product(k, x);
  return s;
}

// sup over a dense lambda grid of lambda * mu(|f| > lambda)^{1/p}; the grid
// includes points just below every level so the supremum is approached.
inline double weak_lp_grid(const std::vector<double>& f, double p, int grid_points) {
  double top = 0.0;
  for (double v : f) top = std::max(top, std::abs(v));
  std::vector<double> lambdas;
  for (int i = 1; i <= grid_points; ++i) lambdas.push_back(top * i / grid_points);
  for (double v : f) lambdas.push_back(std::abs(v) * (1.0 - 1e-9));
  double best = 0.0;
  const double n = static_cast<double>(f.size());
  for (double lambda : lambdas) {
    if (lambda <= 0) continue;
    std::size_t count = 0;
    for (double v : f) count += std::abs(v) > lambda;
    best = std::max(best, lambda * std::pow(count / n, 1.0 / p));
  }
  return best;
}

// max over ranks of |mean of f over I_n(x)|, scanning each cell directly.
inline std::vector<double> direct_maximal(const std::vector<double>& f, int bits) {
  std::vector<double> m(f.size(), 0.0);
  for (int rank = 0; rank <= bits; ++rank) {
    const std::uint64_t mask = (std::uint64_t{1} << rank) - 1;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      double sum = 0.0;
      std::size_t count = 0;
      for (std::uint64_t y = 0; y < f.size(); ++y) {
        if ((y & mask) == (x & mask)) {
          sum += f[y];
          ++count;
        }
      }
      m[x] = std::max(m[x], std::abs(sum / count));
    }
  }
  return m;
}

inline std::vector<double> random_values(std::size_t n, std::uint64_t seed, double lo = -1.0,
                                         double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

inline std::vector<double> random_integers(std::size_t n, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace walsh::oracle
