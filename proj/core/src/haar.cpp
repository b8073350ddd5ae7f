#include "discrep/haar.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "discrep/reduce.hpp"

namespace discrep {

int roth_level(std::size_t n_points) {
  if (n_points < 1) throw std::invalid_argument("roth_level: N must be >= 1");
  return 1 + std::bit_width(static_cast<std::uint64_t>(n_points - 1));
}

std::vector<ShapeVector> shapes_of_order(int dim, int order) {
  if (dim < 1 || order < 0) throw std::invalid_argument("shapes_of_order: bad arguments");
  std::vector<ShapeVector> out;
  std::vector<int> levels(dim, 0);
  levels[0] = order;
  for (;;) {
    out.push_back(ShapeVector{levels});
    int j = 0;
    while (j < dim - 1 && levels[j] == 0) ++j;
    if (j == dim - 1) break;
    int first = levels[j];
    levels[j] = 0;
    levels[j + 1] += 1;
    levels[0] = first - 1;
  }
  return out;
}

namespace {

// tent_I(p): (p-a) on [a, mid), (b-p) on [mid, b), 0 outside I = [a, b).
inline double tent(double p, double a, double w) {
  if (p < a || p >= a + w) return 0.0;
  double mid = a + 0.5 * w;
  return p < mid ? p - a : a + w - p;
}

double linear_term(const PointSet& ps, const ShapeVector& shape) {
  // N * prod_j |I_j|^2 / 4 = N * 2^{-2|r|} / 4^d, identical for every R of
  // the shape.
  return static_cast<double>(ps.size()) *
         std::ldexp(1.0, -2 * shape.order() - 2 * shape.dim());
}

void check_cap(const ShapeVector& shape) {
  for (int l : shape.levels)
    if (l < 0) throw std::invalid_argument("shape level must be >= 0");
  if (shape.order() > kMaxShapeOrder)
    throw std::invalid_argument("shape order exceeds cap");
}

}  // namespace

double haar_coefficient(const PointSet& ps, const DyadicRectangle& rect) {
  if (rect.shape.dim() != ps.dim())
    throw std::invalid_argument("haar_coefficient: dimension mismatch");
  const int d = ps.dim();
  double tent_sum = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto pt = ps.point(i);
    double prod = 1.0;
    for (int j = 0; j < d && prod != 0.0; ++j)
      prod *= tent(pt[j], rect.lower(j), rect.width(j));
    tent_sum += prod;
  }
  return tent_sum - linear_term(ps, rect.shape);
}

double haar_coefficient_rational(const PointSet& ps, const DyadicRectangle& rect) {
  using boost::multiprecision::cpp_rational;
  const int d = ps.dim();
  cpp_rational tent_sum = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto pt = ps.point(i);
    cpp_rational prod = 1;
    for (int j = 0; j < d; ++j) {
      cpp_rational p(pt[j]);  // exact double-to-rational conversion
      cpp_rational a(rect.lower(j)), w(rect.width(j));
      cpp_rational mid = a + w / 2;
      cpp_rational t;
      if (p < a || p >= a + w)
        t = 0;
      else if (p < mid)
        t = p - a;
      else
        t = a + w - p;
      prod *= t;
      if (prod == 0) break;
    }
    tent_sum += prod;
  }
  cpp_rational lin = static_cast<long long>(ps.size());
  for (int j = 0; j < d; ++j) {
    cpp_rational w(rect.width(j));
    lin *= w * w / 4;
  }
  return static_cast<double>(tent_sum - lin);
}

std::vector<double> all_coefficients(const PointSet& ps, const ShapeVector& shape) {
  if (shape.dim() != ps.dim())
    throw std::invalid_argument("all_coefficients: dimension mismatch");
  check_cap(shape);
  const int d = ps.dim();
  const std::uint64_t n_rects = shape.rectangle_count();
  std::vector<double> coefs(n_rects, 0.0);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto pt = ps.point(i);
    std::uint64_t idx = 0;
    double prod = 1.0;
    for (int j = 0; j < d; ++j) {
      int r = shape.levels[j];
      double scaled = std::ldexp(pt[j], r);
      auto k = static_cast<std::uint64_t>(scaled);
      std::uint64_t width = std::uint64_t{1} << r;
      if (k >= width) k = width - 1;  // coordinate 1.0, tent is 0 there
      idx = (idx << r) | k;
      double a = std::ldexp(static_cast<double>(k), -r);
      prod *= tent(pt[j], a, std::ldexp(1.0, -r));
    }
    coefs[idx] += prod;
  }
  double lin = linear_term(ps, shape);
  for (double& c : coefs) c -= lin;
  return coefs;
}

RFunction::RFunction(ShapeVector shape, std::vector<std::uint64_t> packed_signs)
    : shape_(std::move(shape)), packed_(std::move(packed_signs)) {
  check_cap(shape_);
  std::uint64_t words = (shape_.rectangle_count() + 63) / 64;
  if (packed_.size() != words)
    throw std::invalid_argument("RFunction: packed sign array has wrong size");
}

std::uint64_t RFunction::rect_index(std::span<const double> x) const {
  std::uint64_t idx = 0;
  for (int j = 0; j < shape_.dim(); ++j) {
    int r = shape_.levels[j];
    auto k = static_cast<std::uint64_t>(std::ldexp(x[j], r));
    std::uint64_t width = std::uint64_t{1} << r;
    if (k >= width) k = width - 1;
    idx = (idx << r) | k;
  }
  return idx;
}

double RFunction::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != shape_.dim())
    throw std::invalid_argument("RFunction::evaluate: dimension mismatch");
  std::uint64_t idx = 0;
  int left_halves = 0;
  for (int j = 0; j < shape_.dim(); ++j) {
    int r = shape_.levels[j];
    double scaled = std::ldexp(x[j], r + 1);
    auto m = static_cast<std::uint64_t>(scaled);
    std::uint64_t fine_width = std::uint64_t{1} << (r + 1);
    if (m >= fine_width) m = fine_width - 1;
    left_halves += static_cast<int>(~m & 1);
    idx = (idx << r) | (m >> 1);
  }
  double h = (left_halves & 1) ? -1.0 : 1.0;
  return h * sign(idx);
}

GreedyResult build_r_function_greedy(const PointSet& ps, const ShapeVector& shape) {
  auto coefs = all_coefficients(ps, shape);
  std::vector<std::uint64_t> packed((coefs.size() + 63) / 64, 0);
  KahanSum total;
  double max_abs = 0.0;
  for (std::size_t i = 0; i < coefs.size(); ++i) {
    double c = coefs[i];
    if (c >= 0.0) packed[i >> 6] |= std::uint64_t{1} << (i & 63);
    total.add(std::abs(c));
    max_abs = std::max(max_abs, std::abs(c));
  }
  return {RFunction(shape, std::move(packed)), total.value(), max_abs};
}

double inner_product_exact(const PointSet& ps, const RFunction& fn) {
  auto coefs = all_coefficients(ps, fn.shape());
  KahanSum total;
  for (std::size_t i = 0; i < coefs.size(); ++i)
    total.add(fn.sign(i) * coefs[i]);
  return total.value();
}

double inner_product_exact(const PointSet& ps, std::span<const WeightedRFunction> terms) {
  KahanSum total;
  for (const auto& term : terms)
    total.add(term.weight * inner_product_exact(ps, *term.fn));
  return total.value();
}

void write_r_function(std::ostream& os, const RFunction& fn) {
  os.write("DRF1", 4);
  auto put_u32 = [&](std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
  };
  put_u32(static_cast<std::uint32_t>(fn.shape().dim()));
  for (int l : fn.shape().levels) put_u32(static_cast<std::uint32_t>(l));
  for (std::uint64_t word : fn.packed_signs()) {
    unsigned char b[8];
    for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>(word >> (8 * k));
    os.write(reinterpret_cast<const char*>(b), 8);
  }
}

RFunction read_r_function(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "DRF1", 4) != 0)
    throw std::runtime_error("r-function: bad magic");
  auto get_u32 = [&]() {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("r-function: truncated");
    return static_cast<std::uint32_t>(b[0]) | (std::uint32_t{b[1]} << 8) |
           (std::uint32_t{b[2]} << 16) | (std::uint32_t{b[3]} << 24);
  };
  std::uint32_t dim = get_u32();
  if (dim < 1 || dim > 64) throw std::runtime_error("r-function: bad dim");
  ShapeVector shape;
  shape.levels.resize(dim);
  for (auto& l : shape.levels) l = static_cast<int>(get_u32());
  if (shape.order() > kMaxShapeOrder) throw std::runtime_error("r-function: order exceeds cap");
  std::uint64_t words = (shape.rectangle_count() + 63) / 64;
  std::vector<std::uint64_t> packed(words, 0);
  for (auto& word : packed) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw std::runtime_error("r-function: truncated sign array");
    word = 0;
    for (int k = 0; k < 8; ++k) word |= std::uint64_t{b[k]} << (8 * k);
  }
  return RFunction(std::move(shape), std::move(packed));
}

}  // namespace discrep
