#pragma once

// Nörlund means t_n f = (1/Q_n) sum_{k=1}^{n} q_{n-k} S_k f.

#include <cstdint>

#include "walsh/dyadic.hpp"
#include "walsh/transform.hpp"
#include "walsh/weights.hpp"

namespace walsh {

// Literal definition: accumulates q_{n-k} S_k with S_{k+1} = S_k + f^(k) w_k.
// O(n 2^N); kept as the reference path.
DyadicFunction norlund_mean_naive(const DyadicFunction& f, std::uint64_t n,
                                  const WeightFamily& w);

// Multiplier form t_n f = sum_{j<n} (Q_{n-j}/Q_n) f^(j) w_j, one inverse
// transform regardless of n.
DyadicFunction norlund_mean_multiplier(const WalshSpectrum& s, std::uint64_t n,
                                       const WeightFamily& w);

// Multiplier Q_{n-j}/Q_n applied to coefficient j < n.
double norlund_multiplier(const WeightFamily& w, std::uint64_t n, std::uint64_t j);

// sum_{j=a}^{b} q_{b-j} D_j, with exact integer Dirichlet values.
DyadicFunction kernel_sum(const WeightFamily& w, std::uint64_t a, std::uint64_t b,
                          Resolution res);
double kernel_sum_at(const WeightFamily& w, std::uint64_t a, std::uint64_t b, std::uint64_t x);

}  // namespace walsh
