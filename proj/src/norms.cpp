#include "walsh/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "walsh/errors.hpp"

namespace walsh {
namespace {

void check_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw ArgumentError("exponent p must be positive, got " + std::to_string(p));
  }
}

}  // namespace

const char* to_string(NormKind kind) {
  switch (kind) {
    case NormKind::Lp: return "Lp";
    case NormKind::WeakLp: return "weak-Lp";
    case NormKind::HardyMaximal: return "Hp-maximal";
    case NormKind::AtomicEstimate: return "atomic";
  }
  return "?";
}

NormValue lp_quasinorm(const DyadicFunction& f, double p) {
  check_exponent(p);
  double sum = 0.0;
  for (double v : f.values()) sum += std::pow(std::abs(v), p);
  const double mean = sum * f.resolution().cell_measure();
  return NormValue{p, std::pow(mean, 1.0 / p), NormKind::Lp};
}

NormValue weak_lp(const DyadicFunction& f, double p) {
  check_exponent(p);
  std::vector<double> mags(f.size());
  std::transform(f.values().begin(), f.values().end(), mags.begin(),
                 [](double v) { return std::abs(v); });
  std::sort(mags.begin(), mags.end(), std::greater<>());

  // Just below level v_i the super-level set is {|f| >= v_i}.
  const double cell = f.resolution().cell_measure();
  double best = 0.0;
  std::size_t i = 0;
  while (i < mags.size() && mags[i] > 0.0) {
    const double level = mags[i];
    while (i < mags.size() && mags[i] == level) ++i;
    best = std::max(best, level * std::pow(static_cast<double>(i) * cell, 1.0 / p));
  }
  return NormValue{p, best, NormKind::WeakLp};
}

DyadicFunction maximal_function(const DyadicFunction& f) {
  const int bits = f.resolution().bits();
  std::vector<double> avg(f.values().begin(), f.values().end());
  std::vector<double> best(avg.size());
  std::transform(avg.begin(), avg.end(), best.begin(), [](double v) { return std::abs(v); });

  // avg holds rank-n cell averages indexed by prefix; fold one coordinate per step.
  for (int rank = bits; rank > 0; --rank) {
    const std::size_t half = std::size_t{1} << (rank - 1);
    for (std::size_t c = 0; c < half; ++c) avg[c] = 0.5 * (avg[c] + avg[c + half]);
    const std::size_t mask = half - 1;
    for (std::size_t x = 0; x < best.size(); ++x) {
      best[x] = std::max(best[x], std::abs(avg[x & mask]));
    }
  }
  return DyadicFunction(f.resolution(), std::move(best));
}

NormValue hardy_norm_estimate(const DyadicFunction& f, double p) {
  check_exponent(p);
  NormValue v = lp_quasinorm(maximal_function(f), p);
  v.kind = NormKind::HardyMaximal;
  return v;
}

NormValue atomic_norm_estimate(std::span<const double> mus, double p) {
  check_exponent(p);
  double sum = 0.0;
  for (double m : mus) sum += std::pow(std::abs(m), p);
  return NormValue{p, std::pow(sum, 1.0 / p), NormKind::AtomicEstimate};
}

}  // namespace walsh
