#include "walsh/norlund.hpp"

#include <string>
#include <vector>

#include "walsh/errors.hpp"

namespace walsh {
namespace {

double checked_normalizer(const WeightFamily& w, std::uint64_t n, std::size_t cells) {
  if (n > cells) throw DegreeError("Norlund mean t_" + std::to_string(n) + " needs n <= 2^N");
  const double q_n = n == 0 ? 0.0 : w.prefix_sum(n);
  if (!(q_n > 0.0)) throw DegenerateWeightsError("Q_" + std::to_string(n) + " is zero");
  return q_n;
}

}  // namespace

DyadicFunction norlund_mean_naive(const DyadicFunction& f, std::uint64_t n,
                                  const WeightFamily& w) {
  const double q_n = checked_normalizer(w, n, f.size());
  const WalshSpectrum s = fwht_forward(f);
  const std::size_t cells = f.size();
  std::vector<double> partial(cells, 0.0);
  std::vector<double> acc(cells, 0.0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double c = s[k - 1];
    if (c != 0.0) {
      for (std::uint64_t x = 0; x < cells; ++x) partial[x] += c * walsh_sign(k - 1, x);
    }
    const double q = w.weight(static_cast<std::int64_t>(n - k));
    for (std::size_t x = 0; x < cells; ++x) acc[x] += q * partial[x];
  }
  for (double& v : acc) v /= q_n;
  return DyadicFunction(f.resolution(), std::move(acc));
}

double norlund_multiplier(const WeightFamily& w, std::uint64_t n, std::uint64_t j) {
  return w.prefix_sum(n - j) / w.prefix_sum(n);
}

DyadicFunction norlund_mean_multiplier(const WalshSpectrum& s, std::uint64_t n,
                                       const WeightFamily& w) {
  const double q_n = checked_normalizer(w, n, s.size());
  std::vector<double> c(s.size(), 0.0);
  for (std::uint64_t j = 0; j < n; ++j) c[j] = s[j] * (w.prefix_sum(n - j) / q_n);
  return fwht_inverse(WalshSpectrum(s.resolution(), std::move(c)));
}

double kernel_sum_at(const WeightFamily& w, std::uint64_t a, std::uint64_t b, std::uint64_t x) {
  double sum = 0.0;
  for (std::uint64_t j = a; j <= b; ++j) {
    const std::int64_t d = dirichlet_value(j, x);
    if (d != 0) sum += w.weight(static_cast<std::int64_t>(b - j)) * static_cast<double>(d);
  }
  return sum;
}

DyadicFunction kernel_sum(const WeightFamily& w, std::uint64_t a, std::uint64_t b,
                          Resolution res) {
  if (a < 1 || a > b || b > res.cells()) {
    throw ArgumentError("kernel sum needs 1 <= a <= b <= 2^N");
  }
  std::vector<double> v(res.cells());
  for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = kernel_sum_at(w, a, b, x);
  return DyadicFunction(res, std::move(v));
}

}  // namespace walsh
