#pragma once

// L_p and weak-L_p quasi-norms of step functions, the dyadic maximal
// function and Hardy-norm estimates.

#include <span>

#include "walsh/dyadic.hpp"

namespace walsh {

enum class NormKind { Lp, WeakLp, HardyMaximal, AtomicEstimate };

struct NormValue {
  double p = 1.0;
  double value = 0.0;
  NormKind kind = NormKind::Lp;
};

const char* to_string(NormKind kind);

// (int |f|^p dmu)^{1/p}
NormValue lp_quasinorm(const DyadicFunction& f, double p);

// sup_{lambda > 0} lambda * mu(|f| > lambda)^{1/p}, evaluated exactly at the
// jump levels of the distribution function.
NormValue weak_lp(const DyadicFunction& f, double p);

// f*(x) = max_{0<=n<=N} |average of f over I_n(x)|
DyadicFunction maximal_function(const DyadicFunction& f);

NormValue hardy_norm_estimate(const DyadicFunction& f, double p);

// (sum |mu_k|^p)^{1/p} over a given atomic decomposition.
NormValue atomic_norm_estimate(std::span<const double> mus, double p);

}  // namespace walsh
