#include "walsh/dyadic.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "walsh/errors.hpp"

namespace walsh {

Resolution::Resolution(int n_bits) : bits_(n_bits) {
  if (n_bits < 1 || n_bits > kMaxBits) {
    throw ArgumentError("resolution must be in [1, " + std::to_string(kMaxBits) +
                        "], got " + std::to_string(n_bits));
  }
}

double Resolution::cell_measure() const { return std::ldexp(1.0, -bits_); }

DyadicPoint::DyadicPoint(std::uint32_t index, Resolution res) : index_(index), res_(res) {
  if (index >= res.cells()) {
    throw ArgumentError("point index " + std::to_string(index) + " outside 2^" +
                        std::to_string(res.bits()));
  }
}

int DyadicPoint::coordinate(int j) const {
  if (j < 0 || j >= res_.bits()) throw ArgumentError("coordinate index out of range");
  return static_cast<int>((index_ >> j) & 1u);
}

double DyadicCell::measure() const { return std::ldexp(1.0, -rank); }

bool DyadicCell::contains(std::uint32_t index) const {
  const std::uint32_t mask = (rank >= 32) ? ~0u : ((1u << rank) - 1u);
  return (index & mask) == prefix;
}

DyadicFunction::DyadicFunction(Resolution res) : res_(res), values_(res.cells(), 0.0) {}

DyadicFunction::DyadicFunction(Resolution res, std::vector<double> values)
    : res_(res), values_(std::move(values)) {
  if (values_.size() != res_.cells()) {
    throw ArgumentError("function needs " + std::to_string(res_.cells()) + " values, got " +
                        std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ArgumentError("function values must be finite");
  }
}

DyadicFunction DyadicFunction::constant(Resolution res, double c) {
  return DyadicFunction(res, std::vector<double>(res.cells(), c));
}

DyadicFunction DyadicFunction::indicator(Resolution res, const DyadicCell& cell) {
  if (cell.rank > res.bits()) throw ArgumentError("cell rank exceeds resolution");
  std::vector<double> v(res.cells(), 0.0);
  for (std::uint32_t i = 0; i < v.size(); ++i) {
    if (cell.contains(i)) v[i] = 1.0;
  }
  return DyadicFunction(res, std::move(v));
}

DyadicFunction& DyadicFunction::operator+=(const DyadicFunction& other) {
  if (other.res_ != res_) throw ArgumentError("resolution mismatch in sum");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

DyadicFunction& DyadicFunction::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

DyadicPoint group_add(const DyadicPoint& x, const DyadicPoint& y) {
  if (x.resolution() != y.resolution()) throw ArgumentError("resolution mismatch in group_add");
  return DyadicPoint(x.index() ^ y.index(), x.resolution());
}

DyadicPoint basis_point(int n, Resolution res) {
  if (n < 0 || n >= res.bits()) {
    throw ArgumentError("basis point e_" + std::to_string(n) + " needs n < N = " +
                        std::to_string(res.bits()));
  }
  return DyadicPoint(1u << n, res);
}

DyadicCell cell_of(const DyadicPoint& x, int rank) {
  if (rank < 0 || rank > x.resolution().bits()) {
    throw ArgumentError("cell rank " + std::to_string(rank) + " exceeds resolution");
  }
  const std::uint32_t mask = (1u << rank) - 1u;
  return DyadicCell{rank, x.index() & mask};
}

double integrate(const DyadicFunction& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return sum * f.resolution().cell_measure();
}

}  // namespace walsh
