#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace discrep {

struct GeneratorInfo {
  std::string name;
  std::string params;
  std::uint64_t seed = 0;
};

// Immutable N-point distribution in [0,1]^d. Coordinate 1.0 is legal:
// such a point belongs to no anchored box [0,x) and never counts.
class PointSet {
 public:
  PointSet(int dim, std::vector<double> coords, GeneratorInfo generator);

  int dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / dim_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  const std::vector<double>& coords() const { return coords_; }
  const GeneratorInfo& generator() const { return generator_; }

 private:
  int dim_;
  std::vector<double> coords_;  // flat, point-major
  GeneratorInfo generator_;
};

bool is_prime(std::uint64_t n);

struct NetParams {
  std::uint32_t base;      // prime p
  std::uint32_t exponent;  // s, N = p^s
  int dim;                 // requires p >= dim
};

// Seeded uniform points; bit-identical output for identical arguments.
PointSet generate_random(int dim, std::size_t n, std::uint64_t seed);

// Two-dimensional Hammersley set: (k/N, base-2 radical inverse of k).
// For N = 2^s this is a 2-adic net.
PointSet generate_van_der_corput(std::size_t n);

// Faure generator-matrix net over GF(p) with p^s points; requires p prime,
// p >= dim, s >= 2, and p^s < 2^52 so all coordinates are exact doubles.
PointSet generate_faure_net(std::uint32_t p, std::uint32_t s, int dim);

struct NetCheckResult {
  bool ok = true;
  // First violating elementary box, valid when !ok.
  std::vector<std::uint32_t> levels;     // a_1..a_d, sum = s
  std::vector<std::uint64_t> position;   // m_j in [0, p^{a_j})
  std::uint64_t count = 1;               // points found in that box
};

// Checks the net axiom: every p-adic box of volume p^{-s} holds exactly one
// point. The definition's index bound is read as 0 <= m_j < p^{a_j} (the
// literal "m_j < a_j" does not enumerate all boxes of volume 1/N).
// Enumerates all compositions (a_1..a_d) of s and radix-buckets the points.
NetCheckResult verify_net(const PointSet& ps, std::uint32_t p, std::uint32_t s);

// Max |#(P ∩ R) - |R|*N| over `trials` seeded random axis-parallel boxes.
double check_counting_bound(const PointSet& ps, std::size_t trials,
                            std::uint64_t seed);

// Replaces every point of the cube [1 - N^{-delta}, 1]^d by (1,...,1).
PointSet corner_collapse(const PointSet& ps, double delta);

// Number of points lying in [1 - N^{-delta}, 1]^d.
std::size_t corner_count(const PointSet& ps, double delta);

// Text format: header "discrepancy-pointset v1 dim=<d> n=<N> generator=<name>"
// then N lines of d coordinates at 17 significant digits.
void write_pointset_text(std::ostream& os, const PointSet& ps);
PointSet read_pointset_text(std::istream& is);

// Binary format: magic "DPS1", uint32 dim, uint32 n (little-endian),
// then n*dim little-endian doubles.
void write_pointset_binary(std::ostream& os, const PointSet& ps);
PointSet read_pointset_binary(std::istream& is);

}  // namespace discrep
