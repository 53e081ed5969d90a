#include "walsh/transform.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "walsh/errors.hpp"

namespace walsh {

WalshSpectrum::WalshSpectrum(Resolution res) : res_(res), coeffs_(res.cells(), 0.0) {}

WalshSpectrum::WalshSpectrum(Resolution res, std::vector<double> coeffs)
    : res_(res), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != res_.cells()) {
    throw ArgumentError("spectrum needs " + std::to_string(res_.cells()) + " coefficients");
  }
}

WalshSpectrum WalshSpectrum::unit(Resolution res, std::uint64_t k) {
  if (k >= res.cells()) throw DegreeError("unit coefficient index beyond 2^N");
  std::vector<double> c(res.cells(), 0.0);
  c[k] = 1.0;
  return WalshSpectrum(res, std::move(c));
}

int rademacher(int k, const DyadicPoint& x) {
  if (k < 0 || k >= x.resolution().bits()) {
    throw ArgumentError("Rademacher index " + std::to_string(k) + " needs k < N");
  }
  return x.coordinate(k) ? -1 : 1;
}

int walsh_eval(std::uint64_t n, const DyadicPoint& x) {
  if (n >= x.resolution().cells()) {
    throw ArgumentError("Walsh index " + std::to_string(n) + " needs n < 2^N");
  }
  return walsh_sign(n, x.index());
}

DyadicFunction walsh_function(std::uint64_t n, Resolution res) {
  if (n >= res.cells()) throw DegreeError("Walsh index beyond 2^N");
  std::vector<double> v(res.cells());
  for (std::uint64_t i = 0; i < v.size(); ++i) v[i] = walsh_sign(n, i);
  return DyadicFunction(res, std::move(v));
}

void hadamard_in_place(std::span<double> data) {
  const std::size_t n = data.size();
  if (!std::has_single_bit(n)) throw ArgumentError("Hadamard length must be a power of two");
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const double a = data[i];
        const double b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

WalshSpectrum fwht_forward(const DyadicFunction& f) {
  std::vector<double> c(f.values().begin(), f.values().end());
  hadamard_in_place(c);
  const double scale = f.resolution().cell_measure();
  for (double& v : c) v *= scale;
  return WalshSpectrum(f.resolution(), std::move(c));
}

DyadicFunction fwht_inverse(const WalshSpectrum& s) {
  std::vector<double> v(s.coeffs().begin(), s.coeffs().end());
  hadamard_in_place(v);
  return DyadicFunction(s.resolution(), std::move(v));
}

DirichletKernel::DirichletKernel(std::uint64_t n, Resolution res,
                                 std::vector<std::int64_t> values)
    : n_(n), res_(res), values_(std::move(values)) {
  if (values_.size() != res_.cells()) throw ArgumentError("kernel length mismatch");
}

DyadicFunction DirichletKernel::to_function() const {
  std::vector<double> v(values_.begin(), values_.end());
  return DyadicFunction(res_, std::move(v));
}

std::int64_t dirichlet_value(std::uint64_t n, std::uint64_t x) {
  if (x == 0) return static_cast<std::int64_t>(n);  // every w_k(0) = 1
  // x lies in I_t but not I_{t+1}; only digits k <= t contribute:
  // D_{2^{k+1}} - D_{2^k} is 2^k for k < t, -2^t for k = t, 0 beyond.
  const int t = std::countr_zero(x);
  const std::uint64_t below = n & ((std::uint64_t{1} << t) - 1);
  const std::uint64_t at = (n >> t) & 1u;
  const std::int64_t magnitude =
      static_cast<std::int64_t>(below) - static_cast<std::int64_t>(at << t);
  return walsh_sign(n, x) * magnitude;
}

DirichletKernel dirichlet_kernel(std::uint64_t n, Resolution res) {
  if (n < 1 || n > res.cells()) {
    throw ArgumentError("Dirichlet order " + std::to_string(n) + " outside [1, 2^N]");
  }
  std::vector<std::int64_t> v(res.cells());
  for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = dirichlet_value(n, x);
  return DirichletKernel(n, res, std::move(v));
}

DyadicFunction partial_sum(const WalshSpectrum& s, std::uint64_t n) {
  if (n > s.size()) {
    throw DegreeError("partial sum S_" + std::to_string(n) + " needs n <= 2^N");
  }
  std::vector<double> c(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t k = n; k < c.size(); ++k) c[k] = 0.0;
  return fwht_inverse(WalshSpectrum(s.resolution(), std::move(c)));
}

}  // namespace walsh
