#pragma once

// Finite-resolution model of the dyadic group G = Z_2 x Z_2 x ...
//
// A point keeps its first N coordinates; coordinate x_j is bit j of the
// point index (x_0 is the least significant bit). Haar measure is normalized
// so that mu(G) = 1 and every rank-N cell has measure 2^-N.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace walsh {

class Resolution {
 public:
  static constexpr int kMaxBits = 24;

  explicit Resolution(int n_bits);

  int bits() const { return bits_; }
  std::size_t cells() const { return std::size_t{1} << bits_; }
  // Haar measure of one rank-N cell.
  double cell_measure() const;

  friend bool operator==(Resolution, Resolution) = default;

 private:
  int bits_;
};

class DyadicPoint {
 public:
  DyadicPoint(std::uint32_t index, Resolution res);

  std::uint32_t index() const { return index_; }
  Resolution resolution() const { return res_; }
  // Coordinate x_j.
  int coordinate(int j) const;

  friend bool operator==(const DyadicPoint&, const DyadicPoint&) = default;

 private:
  std::uint32_t index_;
  Resolution res_;
};

// I_n(x): all points that agree with x in coordinates 0..n-1.
struct DyadicCell {
  int rank = 0;
  std::uint32_t prefix = 0;

  double measure() const;
  bool contains(std::uint32_t index) const;
  bool contains(const DyadicPoint& x) const { return contains(x.index()); }
};

// Real step function constant on rank-N cells.
class DyadicFunction {
 public:
  explicit DyadicFunction(Resolution res);  // zero function
  DyadicFunction(Resolution res, std::vector<double> values);

  static DyadicFunction constant(Resolution res, double c);
  static DyadicFunction indicator(Resolution res, const DyadicCell& cell);

  Resolution resolution() const { return res_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  DyadicFunction& operator+=(const DyadicFunction& other);
  DyadicFunction& operator*=(double s);
  friend DyadicFunction operator+(DyadicFunction a, const DyadicFunction& b) {
    return a += b;
  }
  friend DyadicFunction operator*(double s, DyadicFunction f) { return f *= s; }

 private:
  Resolution res_;
  std::vector<double> values_;
};

// Coordinatewise addition mod 2.
DyadicPoint group_add(const DyadicPoint& x, const DyadicPoint& y);

// e_n: the point whose only nonzero coordinate is x_n.
DyadicPoint basis_point(int n, Resolution res);

DyadicCell cell_of(const DyadicPoint& x, int rank);

// Haar integral 2^-N * sum of values.
double integrate(const DyadicFunction& f);

// I_2(e_0 + e_1), the cell where the kernel lower bound lives.
inline constexpr DyadicCell kUpperQuarterCell{2, 0b11};

}  // namespace walsh
