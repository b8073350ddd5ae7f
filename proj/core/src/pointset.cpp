#include "discrep/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "discrep/reduce.hpp"
#include "discrep/rng.hpp"

namespace discrep {

PointSet::PointSet(int dim, std::vector<double> coords, GeneratorInfo generator)
    : dim_(dim), coords_(std::move(coords)), generator_(std::move(generator)) {
  if (dim_ < 1) throw std::invalid_argument("PointSet: dim must be >= 1");
  if (coords_.empty() || coords_.size() % dim_ != 0)
    throw std::invalid_argument("PointSet: coordinate count not a multiple of dim");
  for (double c : coords_)
    if (!(c >= 0.0 && c <= 1.0))
      throw std::invalid_argument("PointSet: coordinate outside [0,1]");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PointSet generate_random(int dim, std::size_t n, std::uint64_t seed) {
  if (dim < 1 || n < 1) throw std::invalid_argument("generate_random: dim and n must be >= 1");
  std::vector<double> coords(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    SampleStream stream(seed, i);
    for (int j = 0; j < dim; ++j) coords[i * dim + j] = stream.next_unit();
  }
  return PointSet(dim, std::move(coords),
                  {"random", "n=" + std::to_string(n), seed});
}

namespace {

double radical_inverse_base2(std::uint64_t k) {
  double inv = 0.0, scale = 0.5;
  while (k != 0) {
    if (k & 1) inv += scale;
    scale *= 0.5;
    k >>= 1;
  }
  return inv;
}

}  // namespace

PointSet generate_van_der_corput(std::size_t n) {
  if (n < 1) throw std::invalid_argument("generate_van_der_corput: n must be >= 1");
  std::vector<double> coords(n * 2);
  for (std::size_t k = 0; k < n; ++k) {
    coords[2 * k] = static_cast<double>(k) / static_cast<double>(n);
    coords[2 * k + 1] = radical_inverse_base2(k);
  }
  return PointSet(2, std::move(coords), {"hammersley", "n=" + std::to_string(n), 0});
}

PointSet generate_faure_net(std::uint32_t p, std::uint32_t s, int dim) {
  if (!is_prime(p)) throw std::invalid_argument("generate_faure_net: base must be prime");
  if (static_cast<int>(p) < dim)
    throw std::invalid_argument("generate_faure_net: base must be >= dim");
  if (s < 2) throw std::invalid_argument("generate_faure_net: exponent must be >= 2");
  double n_real = std::pow(static_cast<double>(p), static_cast<double>(s));
  if (n_real >= 0x1.0p52)
    throw std::invalid_argument("generate_faure_net: p^s exceeds exact-double range");
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < s; ++i) n *= p;

  // Pascal's triangle mod p, binom[l][i] for l, i < s.
  std::vector<std::vector<std::uint32_t>> binom(s, std::vector<std::uint32_t>(s, 0));
  for (std::uint32_t l = 0; l < s; ++l) {
    binom[l][0] = 1;
    for (std::uint32_t i = 1; i <= l; ++i)
      binom[l][i] = (binom[l - 1][i - 1] + (i <= l - 1 ? binom[l - 1][i] : 0)) % p;
  }
  // powc[c][e] = c^e mod p for coordinate indices c = 0..dim-1.
  std::vector<std::vector<std::uint32_t>> powc(dim, std::vector<std::uint32_t>(s, 1));
  for (int c = 0; c < dim; ++c)
    for (std::uint32_t e = 1; e < s; ++e)
      powc[c][e] = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(powc[c][e - 1]) * static_cast<std::uint32_t>(c)) % p);

  std::vector<double> inv_pow(s + 1, 1.0);
  for (std::uint32_t i = 1; i <= s; ++i) inv_pow[i] = inv_pow[i - 1] / p;

  std::vector<double> coords(n * dim);
  std::vector<std::uint32_t> digits(s);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint64_t t = k;
    for (std::uint32_t i = 0; i < s; ++i) {
      digits[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    for (int c = 0; c < dim; ++c) {
      // y = C^c * digits over GF(p); the Pascal power matrix has entries
      // binom(l, i) * c^(l-i) for l >= i. c = 0 gives the identity, so the
      // first coordinate is the base-p van der Corput value of k.
      double x = 0.0;
      for (std::uint32_t i = 0; i < s; ++i) {
        std::uint64_t y = 0;
        for (std::uint32_t l = i; l < s; ++l)
          y += static_cast<std::uint64_t>(binom[l][i]) * powc[c][l - i] % p * digits[l];
        x += static_cast<double>(y % p) * inv_pow[i + 1];
      }
      coords[k * dim + c] = x;
    }
  }
  return PointSet(dim, std::move(coords),
                  {"faure", "p=" + std::to_string(p) + " s=" + std::to_string(s), 0});
}

namespace {

// floor(x * scale) with a one-sided guard: values within 1e-9 of the next
// integer are treated as lying on the boundary (points on a dyadic/p-adic
// division belong to the right box). Returns scale for x == 1.
std::uint64_t guarded_digit(double x, double scale) {
  double t = x * scale;
  auto d = static_cast<std::uint64_t>(t);
  if (t - static_cast<double>(d) > 1.0 - 1e-9) ++d;
  return d;
}

}  // namespace

NetCheckResult verify_net(const PointSet& ps, std::uint32_t p, std::uint32_t s) {
  const int d = ps.dim();
  const std::size_t n = ps.size();
  std::uint64_t expect = 1;
  for (std::uint32_t i = 0; i < s; ++i) expect *= p;
  if (n != expect) throw std::invalid_argument("verify_net: N != p^s");

  std::vector<double> pow_p(s + 1, 1.0);
  for (std::uint32_t i = 1; i <= s; ++i) pow_p[i] = pow_p[i - 1] * p;

  // Enumerate compositions (a_1..a_d) of s.
  std::vector<std::uint32_t> levels(d, 0);
  levels[0] = s;
  std::vector<std::uint32_t> counts(n);
  for (;;) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto pt = ps.point(i);
      std::uint64_t idx = 0;
      bool outside = false;
      for (int j = 0; j < d; ++j) {
        std::uint64_t dig = guarded_digit(pt[j], pow_p[levels[j]]);
        if (dig >= static_cast<std::uint64_t>(pow_p[levels[j]])) {
          outside = true;  // coordinate 1.0: in no box of this partition
          break;
        }
        idx = idx * static_cast<std::uint64_t>(pow_p[levels[j]]) + dig;
      }
      if (!outside) ++counts[idx];
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (counts[b] != 1) {
        NetCheckResult bad;
        bad.ok = false;
        bad.levels = levels;
        bad.count = counts[b];
        bad.position.assign(d, 0);
        std::uint64_t rem = b;
        for (int j = d - 1; j >= 0; --j) {
          auto radix = static_cast<std::uint64_t>(pow_p[levels[j]]);
          bad.position[j] = rem % radix;
          rem /= radix;
        }
        return bad;
      }
    }
    // next composition
    int j = 0;
    while (j < d - 1 && levels[j] == 0) ++j;
    if (j == d - 1) break;
    std::uint32_t first = levels[j];
    levels[j] = 0;
    levels[j + 1] += 1;
    levels[0] = first - 1;
  }
  return {};
}

double check_counting_bound(const PointSet& ps, std::size_t trials,
                            std::uint64_t seed) {
  const int d = ps.dim();
  const auto n = static_cast<double>(ps.size());
  const std::vector<double>& coords = ps.coords();
  auto partials = parallel_blocks<double>(trials, 64, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> a(d), b(d);
    double worst = 0.0;
    for (std::size_t t = lo; t < hi; ++t) {
      SampleStream stream(seed, t);
      double vol = 1.0;
      for (int j = 0; j < d; ++j) {
        double u = stream.next_unit(), v = stream.next_unit();
        if (u > v) std::swap(u, v);
        a[j] = u;
        b[j] = v;
        vol *= v - u;
      }
      std::size_t inside = 0;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const double* pt = coords.data() + i * d;
        bool in = true;
        for (int j = 0; j < d; ++j)
          if (pt[j] < a[j] || pt[j] >= b[j]) {
            in = false;
            break;
          }
        inside += in;
      }
      worst = std::max(worst, std::abs(static_cast<double>(inside) - vol * n));
    }
    return worst;
  });
  double worst = 0.0;
  for (double w : partials) worst = std::max(worst, w);
  return worst;
}

std::size_t corner_count(const PointSet& ps, double delta) {
  double threshold = 1.0 - std::pow(static_cast<double>(ps.size()), -delta);
  std::size_t count = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto pt = ps.point(i);
    bool in = true;
    for (double c : pt)
      if (c < threshold) {
        in = false;
        break;
      }
    count += in;
  }
  return count;
}

PointSet corner_collapse(const PointSet& ps, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("corner_collapse: delta must be > 0");
  double threshold = 1.0 - std::pow(static_cast<double>(ps.size()), -delta);
  const int d = ps.dim();
  std::vector<double> coords = ps.coords();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    double* pt = coords.data() + i * d;
    bool in = true;
    for (int j = 0; j < d; ++j)
      if (pt[j] < threshold) {
        in = false;
        break;
      }
    if (in)
      for (int j = 0; j < d; ++j) pt[j] = 1.0;
  }
  GeneratorInfo gen = ps.generator();
  gen.name += "+corner-collapse";
  gen.params += " delta=" + std::to_string(delta);
  return PointSet(d, std::move(coords), std::move(gen));
}

}  // namespace discrep
