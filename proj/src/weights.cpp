#include "walsh/weights.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "walsh/errors.hpp"

namespace walsh {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

bool is_negative_integer(double a) { return a < 0 && a == std::floor(a); }

// Beyond this many terms prefix_sum_extended switches to asymptotics.
constexpr double kExplicitSumLimit = 1u << 22;

}  // namespace

double cesaro_A(std::int64_t n, double alpha) {
  if (is_negative_integer(alpha)) {
    throw ArgumentError("Cesaro number undefined for alpha = " + shortest(alpha));
  }
  if (n < 0) throw ArgumentError("Cesaro number needs n >= 0");
  double a = 1.0;
  for (std::int64_t i = 1; i <= n; ++i) a *= (alpha + static_cast<double>(i)) / static_cast<double>(i);
  return a;
}

double vlog_default_q0() { return 2.0 / std::numbers::ln2 - 1.0 / std::log(3.0); }

WeightFamily::WeightFamily(WeightKind kind) : kind_(std::move(kind)) {}

WeightFamily WeightFamily::fejer() { return WeightFamily(family::Fejer{}); }
WeightFamily WeightFamily::logarithmic() { return WeightFamily(family::Logarithmic{}); }

WeightFamily WeightFamily::cesaro(double alpha) {
  if (!std::isfinite(alpha) || is_negative_integer(alpha - 1.0)) {
    throw ArgumentError("Cesaro weights need alpha - 1 not a negative integer");
  }
  return WeightFamily(family::Cesaro{alpha});
}

WeightFamily WeightFamily::ualpha(double alpha) {
  if (!std::isfinite(alpha)) throw ArgumentError("U weights need finite alpha");
  return WeightFamily(family::UAlpha{alpha});
}

WeightFamily WeightFamily::vlog(double q0) {
  if (!std::isfinite(q0) || q0 < 0) throw ArgumentError("VLog q0 must be finite and >= 0");
  return WeightFamily(family::VLog{q0});
}

WeightFamily WeightFamily::custom(std::vector<double> q, std::string label) {
  if (q.empty()) throw ArgumentError("custom weights must be non-empty");
  for (double v : q) {
    if (!std::isfinite(v) || v < 0) throw ArgumentError("custom weights must be finite and >= 0");
  }
  return WeightFamily(family::Custom{std::move(q), std::move(label)});
}

std::string WeightFamily::describe() const {
  return std::visit(
      Overloaded{
          [](const family::Fejer&) { return std::string("fejer"); },
          [](const family::Logarithmic&) { return std::string("log"); },
          [](const family::Cesaro& c) { return "cesaro:" + shortest(c.alpha); },
          [](const family::UAlpha& u) { return "ualpha:" + shortest(u.alpha); },
          [](const family::VLog& v) {
            return v.q0 == vlog_default_q0() ? std::string("vlog") : "vlog:" + shortest(v.q0);
          },
          [](const family::Custom& c) { return "custom:" + c.label; },
      },
      kind_);
}

std::int64_t WeightFamily::max_index() const {
  if (const auto* c = std::get_if<family::Custom>(&kind_)) {
    return static_cast<std::int64_t>(c->q.size()) - 1;
  }
  return -1;
}

double WeightFamily::compute_weight(std::int64_t j) const {
  return std::visit(
      Overloaded{
          [](const family::Fejer&) { return 1.0; },
          [j](const family::Logarithmic&) { return 1.0 / static_cast<double>(j + 1); },
          [j](const family::Cesaro& c) { return cesaro_A(j, c.alpha - 1.0); },
          [j](const family::UAlpha& u) {
            return std::pow(static_cast<double>(j + 1), u.alpha - 1.0);
          },
          [j](const family::VLog& v) {
            return j == 0 ? v.q0 : 1.0 / std::log(static_cast<double>(j + 1));
          },
          [j](const family::Custom& c) {
            if (j >= static_cast<std::int64_t>(c.q.size())) {
              throw ArgumentError("custom weight index " + std::to_string(j) +
                                  " beyond supplied sequence");
            }
            return c.q[static_cast<std::size_t>(j)];
          },
      },
      kind_);
}

double WeightFamily::weight(std::int64_t j) const {
  if (j < 0) throw ArgumentError("weight index must be >= 0");
  if (static_cast<std::uint64_t>(j) < q_.size()) return q_[static_cast<std::size_t>(j)];
  return compute_weight(j);
}

void WeightFamily::ensure(std::uint64_t horizon) {
  if (horizon <= q_.size()) return;
  const std::int64_t limit = max_index();
  if (limit >= 0 && horizon > static_cast<std::uint64_t>(limit) + 1) {
    horizon = static_cast<std::uint64_t>(limit) + 1;
  }
  q_.reserve(horizon);
  prefix_.reserve(horizon + 1);
  for (std::uint64_t j = q_.size(); j < horizon; ++j) {
    const double v = next_weight(j, q_.empty() ? 0.0 : q_.back());
    q_.push_back(v);
    prefix_.push_back(prefix_.back() + v);
  }
}

double WeightFamily::next_weight(std::uint64_t j, double previous) const {
  if (const auto* ces = std::get_if<family::Cesaro>(&kind_); ces != nullptr && j > 0) {
    // A_j^{a-1} = A_{j-1}^{a-1} (a - 1 + j) / j
    const double jd = static_cast<double>(j);
    return previous * (ces->alpha - 1.0 + jd) / jd;
  }
  return compute_weight(static_cast<std::int64_t>(j));
}

double WeightFamily::prefix_sum(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  double sum = prefix_.back();
  double q = q_.empty() ? 0.0 : q_.back();
  for (std::uint64_t k = q_.size(); k < n; ++k) {
    q = next_weight(k, q);
    sum += q;
  }
  return sum;
}

double WeightFamily::prefix_sum_extended(double n) const {
  if (n <= kExplicitSumLimit) return prefix_sum(static_cast<std::uint64_t>(n));
  const double m = kExplicitSumLimit;
  return std::visit(
      Overloaded{
          [n](const family::Fejer&) { return n; },
          [n](const family::Logarithmic&) {
            return std::log(n) + std::numbers::egamma + 0.5 / n - 1.0 / (12.0 * n * n);
          },
          [n](const family::Cesaro& c) {
            // Q_n = A_{n-1}^alpha
            return std::exp(std::lgamma(n + c.alpha) - std::lgamma(n) - std::lgamma(c.alpha + 1.0));
          },
          [&](const family::UAlpha& u) {
            // sum_{k=m+1}^{n} k^{a-1}
            const double a = u.alpha;
            const auto g = [a](double x) { return std::pow(x, a - 1.0); };
            const auto dg = [a](double x) { return (a - 1.0) * std::pow(x, a - 2.0); };
            const double integral =
                a == 0.0 ? std::log(n / m) : (std::pow(n, a) - std::pow(m, a)) / a;
            return prefix_sum(static_cast<std::uint64_t>(m)) + integral + (g(n) - g(m)) / 2.0 +
                   (dg(n) - dg(m)) / 12.0;
          },
          [&](const family::VLog&) {
            // sum_{k=m+1}^{n} 1/ln k, integral is li(n) - li(m)
            const auto g = [](double x) { return 1.0 / std::log(x); };
            const auto dg = [](double x) {
              const double l = std::log(x);
              return -1.0 / (x * l * l);
            };
            const double integral = std::expint(std::log(n)) - std::expint(std::log(m));
            return prefix_sum(static_cast<std::uint64_t>(m)) + integral + (g(n) - g(m)) / 2.0 +
                   (dg(n) - dg(m)) / 12.0;
          },
          [](const family::Custom&) -> double {
            throw ArgumentError("custom weights have no prefix sum beyond their length");
          },
      },
      kind_);
}

StructureReport validate_structure(const WeightFamily& w, std::int64_t n_max) {
  if (n_max < 4) throw ArgumentError("validate_structure needs n_max >= 4");
  std::int64_t last = n_max;
  if (w.max_index() >= 0) last = std::min(last, w.max_index());
  std::vector<double> q(static_cast<std::size_t>(last + 1));
  for (std::int64_t j = 0; j <= last; ++j) q[static_cast<std::size_t>(j)] = w.weight(j);

  const auto tol = [](double scale) { return 1e-12 * std::max(1.0, std::abs(scale)); };
  StructureReport r{true, true, true};
  for (std::size_t j = 0; j + 1 < q.size(); ++j) {
    if (q[j + 1] > q[j] + tol(q[j])) r.non_increasing = false;
  }
  for (std::size_t n = 1; n + 1 < q.size(); ++n) {
    if (q[n - 1] + q[n + 1] - 2.0 * q[n] < -tol(q[n])) r.convex = false;
  }
  for (std::size_t n = 2; n + 2 < q.size(); ++n) {
    if (q[n - 2] + q[n + 2] - 2.0 * q[n] < -tol(q[n])) r.second_gap = false;
  }
  return r;
}

KappaReport kappa(const WeightFamily& w) {
  const double k = w.weight(1) - 1.5 * w.weight(3);
  return KappaReport{k, k > 0.0};
}

double block_gap_constant(const WeightFamily& w) {
  return w.weight(1) - w.weight(3) - 1.5 * w.weight(5);
}

double cesaro_kappa_threshold() { return (std::sqrt(17.0) - 3.0) / 2.0; }

double ualpha_kappa_threshold() { return 2.0 - std::log2(3.0); }

}  // namespace walsh
