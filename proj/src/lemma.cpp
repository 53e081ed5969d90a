#include "walsh/lemma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "walsh/errors.hpp"
#include "walsh/norlund.hpp"
#include "walsh/transform.hpp"

namespace walsh {

Lemma2Report lemma2_check(const WeightFamily& w, std::int64_t alpha_k, int res_bits) {
  if (alpha_k < 1) throw ArgumentError("alpha_k must be >= 1");
  const int minimal = static_cast<int>(2 * alpha_k + 1);
  if (res_bits == 0) res_bits = minimal;
  if (res_bits < minimal) {
    throw DegreeError("kernel for alpha_k = " + std::to_string(alpha_k) + " needs resolution " +
                      std::to_string(minimal));
  }
  const Resolution res(res_bits);
  const std::uint64_t lo = std::uint64_t{1} << (2 * alpha_k);
  const std::uint64_t hi = lo << 1;

  WeightFamily cached = w;
  cached.ensure(hi + 1);
  const StructureReport sr = validate_structure(cached, std::max<std::int64_t>(4, hi));
  if (!sr.admissible()) {
    throw PreconditionError(w.describe() + " is not convex and non-increasing");
  }

  Lemma2Report r;
  r.family = w.describe();
  r.alpha_k = alpha_k;
  r.resolution = res_bits;
  r.kappa = kappa(cached).kappa;
  r.min_abs_kernel = std::numeric_limits<double>::infinity();
  for (std::uint64_t x = 0; x < res.cells(); ++x) {
    if (!kUpperQuarterCell.contains(static_cast<std::uint32_t>(x))) continue;
    r.min_abs_kernel = std::min(r.min_abs_kernel, std::abs(kernel_sum_at(cached, lo, hi, x)));
  }
  r.passed = r.min_abs_kernel >= r.kappa - kLemmaSlack;
  return r;
}

TelescopeCheck telescope_check(const WeightFamily& w, std::int64_t alpha_k) {
  if (alpha_k < 1) throw ArgumentError("alpha_k must be >= 1");
  const std::int64_t m = std::int64_t{1} << (2 * alpha_k + 1);
  const std::int64_t first = (std::int64_t{1} << (2 * alpha_k - 2)) + 1;
  const std::int64_t last = (std::int64_t{1} << (2 * alpha_k - 1)) - 1;
  TelescopeCheck t;
  for (std::int64_t j = first; j <= last; ++j) {
    t.gap_sum += std::abs(w.weight(m - 4 * j + 3) - w.weight(m - 4 * j + 1));
  }
  t.ceiling = 0.5 * (w.weight(3) - w.weight((std::int64_t{1} << (2 * alpha_k)) - 1));
  return t;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

namespace {

void record(IdentityCheck& c, bool ok, const std::string& what) {
  ++c.cases;
  if (!ok && c.passed) {
    c.passed = false;
    c.first_failure = what;
  }
}

}  // namespace

IdentityReport identity_suite(Resolution res, const std::vector<WeightFamily>& families) {
  if (res.bits() > 8) throw ArgumentError("identity suite is exhaustive only up to N = 8");
  const std::uint64_t cells = res.cells();
  IdentityReport report;
  report.resolution = res.bits();

  IdentityCheck powers{"dirichlet-dyadic-power"};
  for (int n = 0; n <= res.bits(); ++n) {
    const std::uint64_t order = std::uint64_t{1} << n;
    const DirichletKernel d = dirichlet_kernel(order, res);
    const DyadicCell cell{n, 0};
    for (std::uint64_t x = 0; x < cells; ++x) {
      const std::int64_t expect =
          cell.contains(static_cast<std::uint32_t>(x)) ? static_cast<std::int64_t>(order) : 0;
      record(powers, d[x] == expect, "n=" + std::to_string(n) + " x=" + std::to_string(x));
    }
  }
  report.checks.push_back(powers);

  // Running sum D_{n+1} = D_n + w_n against the closed form.
  IdentityCheck closed{"dirichlet-closed-form"};
  std::vector<std::int64_t> running(cells, 0);
  for (std::uint64_t n = 1; n <= cells; ++n) {
    for (std::uint64_t x = 0; x < cells; ++x) running[x] += walsh_sign(n - 1, x);
    const DirichletKernel d = dirichlet_kernel(n, res);
    for (std::uint64_t x = 0; x < cells; ++x) {
      record(closed, d[x] == running[x], "n=" + std::to_string(n) + " x=" + std::to_string(x));
    }
  }
  report.checks.push_back(closed);

  IdentityCheck character{"character-identity"};
  for (std::uint64_t n = 0; n < cells; ++n) {
    for (std::uint64_t x = 0; x < cells; ++x) {
      for (std::uint64_t y = 0; y < cells; ++y) {
        const bool ok = walsh_sign(n, x ^ y) == walsh_sign(n, x) * walsh_sign(n, y);
        if (ok) {
          ++character.cases;
        } else {
          record(character, ok,
                 "n=" + std::to_string(n) + " x=" + std::to_string(x) + " y=" + std::to_string(y));
        }
      }
    }
  }
  report.checks.push_back(character);

  IdentityCheck gap{"second-gap-convexity"};
  for (const WeightFamily& w : families) {
    if (!validate_structure(w, std::max<std::int64_t>(4, static_cast<std::int64_t>(cells)))
             .admissible()) {
      continue;
    }
    const std::int64_t top = std::min<std::int64_t>(
        static_cast<std::int64_t>(cells), w.max_index() >= 0 ? w.max_index() : INT64_MAX);
    for (std::int64_t n = 2; n + 2 <= top; ++n) {
      const double lhs = w.weight(n - 2) + w.weight(n + 2) - 2.0 * w.weight(n);
      record(gap, lhs >= -1e-12 * std::max(1.0, w.weight(n)),
             w.describe() + " n=" + std::to_string(n));
    }
  }
  report.checks.push_back(gap);

  IdentityCheck parity{"odd-even-on-upper-quarter"};
  // D_{2m} vanishes on the cell, so D_{2m+1} = w_{2m} = -w_{2m+1} there.
  for (std::uint64_t j = 1; j <= cells; ++j) {
    for (std::uint64_t x = 0; x < cells; ++x) {
      if (!kUpperQuarterCell.contains(static_cast<std::uint32_t>(x))) continue;
      const std::int64_t expect = (j % 2 == 1) ? walsh_sign(j - 1, x) : 0;
      record(parity, dirichlet_value(j, x) == expect,
             "j=" + std::to_string(j) + " x=" + std::to_string(x));
    }
  }
  report.checks.push_back(parity);
  return report;
}

}  // namespace walsh
