#pragma once

// Walsh–Paley system, the fast Walsh–Hadamard transform and Dirichlet kernels.
//
// Spectra are kept in Paley order: coefficient k multiplies
// w_k(x) = (-1)^popcount(k & x). With bit j of the index holding x_j this is
// exactly the natural order of the in-place butterfly, so no reordering pass
// is needed. The 2^-N factor sits in the forward transform, making
// coefficient k equal to the Haar integral of f * w_k.

#include <cstdint>
#include <span>
#include <vector>

#include "walsh/dyadic.hpp"

namespace walsh {

class WalshSpectrum {
 public:
  explicit WalshSpectrum(Resolution res);  // zero spectrum
  WalshSpectrum(Resolution res, std::vector<double> coeffs);

  static WalshSpectrum unit(Resolution res, std::uint64_t k);

  Resolution resolution() const { return res_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t k) const { return coeffs_[k]; }

 private:
  Resolution res_;
  std::vector<double> coeffs_;
};

// r_k(x) = (-1)^{x_k}
int rademacher(int k, const DyadicPoint& x);

// w_n(x) = prod_k r_k(x)^{n_k}
int walsh_eval(std::uint64_t n, const DyadicPoint& x);

// Unchecked sign kernel used by inner loops.
inline int walsh_sign(std::uint64_t n, std::uint64_t x) {
  return (__builtin_popcountll(n & x) & 1) ? -1 : 1;
}

// w_n sampled on every cell.
DyadicFunction walsh_function(std::uint64_t n, Resolution res);

// Unnormalized in-place butterfly: data[k] <- sum_i data[i] (-1)^popcount(k & i).
// Length must be a power of two.
void hadamard_in_place(std::span<double> data);

WalshSpectrum fwht_forward(const DyadicFunction& f);
DyadicFunction fwht_inverse(const WalshSpectrum& s);

// Exact integer-valued kernel D_n = sum_{k<n} w_k.
class DirichletKernel {
 public:
  DirichletKernel(std::uint64_t n, Resolution res, std::vector<std::int64_t> values);

  std::uint64_t order() const { return n_; }
  Resolution resolution() const { return res_; }
  std::span<const std::int64_t> values() const { return values_; }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  DyadicFunction to_function() const;

 private:
  std::uint64_t n_;
  Resolution res_;
  std::vector<std::int64_t> values_;
};

// D_n(x) at a single cell index, 0 <= n <= 2^N, via the binary-digit closed
// form D_n = w_n sum_k n_k (D_{2^{k+1}} - D_{2^k}) with D_{2^k} = 2^k 1_{I_k}.
std::int64_t dirichlet_value(std::uint64_t n, std::uint64_t x);

DirichletKernel dirichlet_kernel(std::uint64_t n, Resolution res);

// S_n f = sum_{k<n} f^(k) w_k.
DyadicFunction partial_sum(const WalshSpectrum& s, std::uint64_t n);

}  // namespace walsh
