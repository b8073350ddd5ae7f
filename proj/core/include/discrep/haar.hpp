#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "discrep/pointset.hpp"

namespace discrep {

// Per-coordinate dyadic levels r = (r_1..r_d); D_r partitions [0,1]^d into
// 2^{|r|} rectangles of side 2^{-r_j}.
struct ShapeVector {
  std::vector<int> levels;

  int dim() const { return static_cast<int>(levels.size()); }
  int order() const {
    int s = 0;
    for (int l : levels) s += l;
    return s;
  }
  std::uint64_t rectangle_count() const { return std::uint64_t{1} << order(); }
};

// n = ceil(1 + log2 N), the total level at which boxes have volume ~ 1/N.
int roth_level(std::size_t n_points);

// All shapes of a given order (compositions of `order` into dim parts).
std::vector<ShapeVector> shapes_of_order(int dim, int order);

constexpr int kMaxShapeOrder = 26;  // memory guard for dense sign storage

struct DyadicRectangle {
  ShapeVector shape;
  std::vector<std::uint32_t> pos;  // pos_j in [0, 2^{r_j})

  double lower(int j) const { return std::ldexp(static_cast<double>(pos[j]), -shape.levels[j]); }
  double width(int j) const { return std::ldexp(1.0, -shape.levels[j]); }
};

// Exact Haar coefficient <D_N, h_R> against the L^inf-normalized Haar
// function: sum_p prod_j tent_{I_j}(p_j) - N prod_j |I_j|^2/4, where tent is
// (p-a) on the left half of I = [a,b) and (b-p) on the right half.
double haar_coefficient(const PointSet& ps, const DyadicRectangle& rect);

// Same value computed in exact rational arithmetic (coordinates converted
// exactly from their double representation), for cross-checks at small N.
double haar_coefficient_rational(const PointSet& ps, const DyadicRectangle& rect);

// Coefficients for every R in D_r, indexed by mixed radix over pos
// (last coordinate fastest). O(N d + 2^{|r|}) by bucketing each point into
// the unique rectangle containing it.
std::vector<double> all_coefficients(const PointSet& ps, const ShapeVector& shape);

// Generalized Rademacher function: one sign per rectangle of D_r,
// bit-packed (set bit = +1).
class RFunction {
 public:
  RFunction(ShapeVector shape, std::vector<std::uint64_t> packed_signs);

  const ShapeVector& shape() const { return shape_; }
  int sign(std::uint64_t rect_index) const {
    return (packed_[rect_index >> 6] >> (rect_index & 63)) & 1 ? 1 : -1;
  }
  std::uint64_t rect_index(std::span<const double> x) const;

  // epsilon_R * h_R(x) for the R containing x; +-1 a.e., right-continuous
  // on dyadic division planes.
  double evaluate(std::span<const double> x) const;

  const std::vector<std::uint64_t>& packed_signs() const { return packed_; }

 private:
  ShapeVector shape_;
  std::vector<std::uint64_t> packed_;
};

struct GreedyResult {
  RFunction fn;
  double inner_product;  // <D_N, fn> = sum_R |<D_N, h_R>|
  double max_abs_coefficient;
};

// Signs chosen as sign(<D_N, h_R>) (+1 at zero), which maximizes <D_N, f>
// over all r-functions of the shape.
GreedyResult build_r_function_greedy(const PointSet& ps, const ShapeVector& shape);

// Exact <D_N, f> (and weighted-sum variant), via per-shape coefficients.
double inner_product_exact(const PointSet& ps, const RFunction& fn);

struct WeightedRFunction {
  double weight;
  const RFunction* fn;
};
double inner_product_exact(const PointSet& ps, std::span<const WeightedRFunction> terms);

// Binary serialization: magic "DRF1", uint32 dim, uint32 levels[dim], then
// the bit-packed sign array (little-endian words).
void write_r_function(std::ostream& os, const RFunction& fn);
RFunction read_r_function(std::istream& is);

}  // namespace discrep
