#include "oracles.hpp"

#include <cmath>
#include <cstdint>

namespace discrep::testing {

double dyadic_grid_integral(int dim, int res,
                            const std::function<double(std::span<const double>)>& fn) {
  const std::uint64_t per_axis = std::uint64_t{1} << res;
  const double h = std::ldexp(1.0, -res);
  std::vector<std::uint64_t> idx(dim, 0);
  std::vector<double> x(dim);
  double total = 0.0;
  for (;;) {
    for (int j = 0; j < dim; ++j) x[j] = (static_cast<double>(idx[j]) + 0.5) * h;
    total += fn(x);
    int j = 0;
    while (j < dim && ++idx[j] == per_axis) idx[j++] = 0;
    if (j == dim) break;
  }
  return total * std::pow(h, dim);
}

double quad_discrepancy_haar(const PointSet& ps, const DyadicRectangle& rect, int res) {
  const int d = ps.dim();
  const double h = std::ldexp(1.0, -res);
  const auto n_points = static_cast<double>(ps.size());

  // Classify points: outside R's influence on some axis -> the membership
  // test can never pass; strictly below R on all axes -> always counted;
  // otherwise only the axes crossing R need a per-node test.
  std::size_t base = 0;
  struct Pending {
    std::vector<double> coord;   // only the crossing axes
    std::vector<int> axis;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto pt = ps.point(i);
    bool never = false;
    Pending pend;
    for (int j = 0; j < d; ++j) {
      double a = rect.lower(j), b = a + rect.width(j);
      if (pt[j] >= b) {
        never = true;
        break;
      }
      if (pt[j] >= a) {
        pend.coord.push_back(pt[j]);
        pend.axis.push_back(j);
      }
    }
    if (never) continue;
    if (pend.axis.empty())
      ++base;
    else
      pending.push_back(std::move(pend));
  }

  std::vector<std::uint64_t> counts(d), idx(d, 0);
  std::vector<double> x(d);
  for (int j = 0; j < d; ++j)
    counts[j] = std::uint64_t{1} << (res - rect.shape.levels[j]);

  double total = 0.0;
  for (;;) {
    double volume = 1.0;
    int left_halves = 0;
    for (int j = 0; j < d; ++j) {
      x[j] = rect.lower(j) + (static_cast<double>(idx[j]) + 0.5) * h;
      volume *= x[j];
      double mid = rect.lower(j) + 0.5 * rect.width(j);
      left_halves += x[j] < mid;
    }
    double count = static_cast<double>(base);
    for (const auto& pend : pending) {
      bool in = true;
      for (std::size_t k = 0; k < pend.axis.size(); ++k)
        if (!(pend.coord[k] < x[pend.axis[k]])) {
          in = false;
          break;
        }
      count += in;
    }
    double haar = (left_halves & 1) ? -1.0 : 1.0;
    total += (count - n_points * volume) * haar;
    int j = 0;
    while (j < d && ++idx[j] == counts[j]) idx[j++] = 0;
    if (j == d) break;
  }
  return total * std::pow(h, d);
}

std::size_t brute_corner_count(const PointSet& ps, double lo) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto pt = ps.point(i);
    bool in = true;
    for (double c : pt)
      if (c < lo) {
        in = false;
        break;
      }
    count += in;
  }
  return count;
}

}  // namespace discrep::testing
