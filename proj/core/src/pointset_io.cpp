#include <array>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "discrep/pointset.hpp"

namespace discrep {

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
  std::array<unsigned char, 4> b{static_cast<unsigned char>(v),
                                 static_cast<unsigned char>(v >> 8),
                                 static_cast<unsigned char>(v >> 16),
                                 static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b.data()), 4);
}

std::uint32_t get_u32(std::istream& is) {
  std::array<unsigned char, 4> b{};
  is.read(reinterpret_cast<char*>(b.data()), 4);
  if (!is) throw std::runtime_error("pointset binary: truncated header");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void write_pointset_text(std::ostream& os, const PointSet& ps) {
  os << "discrepancy-pointset v1 dim=" << ps.dim() << " n=" << ps.size()
     << " generator=" << ps.generator().name << "\n";
  char buf[32];
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto pt = ps.point(i);
    for (int j = 0; j < ps.dim(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", pt[j]);
      os << (j ? " " : "") << buf;
    }
    os << "\n";
  }
}

PointSet read_pointset_text(std::istream& is) {
  std::string header;
  if (!std::getline(is, header))
    throw std::runtime_error("pointset text: missing header");
  std::istringstream hs(header);
  std::string magic, field;
  hs >> magic;
  if (magic != "discrepancy-pointset")
    throw std::runtime_error("pointset text: bad magic");
  hs >> field;
  if (field != "v1") throw std::runtime_error("pointset text: unsupported version");
  int dim = 0;
  std::size_t n = 0;
  std::string name = "unknown";
  while (hs >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) continue;
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "dim") dim = std::stoi(val);
    else if (key == "n") n = std::stoull(val);
    else if (key == "generator") name = val;
  }
  if (dim < 1 || n < 1) throw std::runtime_error("pointset text: bad dim/n");
  std::vector<double> coords(n * dim);
  for (double& c : coords)
    if (!(is >> c)) throw std::runtime_error("pointset text: truncated coordinates");
  return PointSet(dim, std::move(coords), {name, "", 0});
}

void write_pointset_binary(std::ostream& os, const PointSet& ps) {
  os.write("DPS1", 4);
  put_u32(os, static_cast<std::uint32_t>(ps.dim()));
  put_u32(os, static_cast<std::uint32_t>(ps.size()));
  for (double c : ps.coords()) {
    std::uint64_t bits;
    std::memcpy(&bits, &c, 8);
    std::array<unsigned char, 8> b{};
    for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>(bits >> (8 * k));
    os.write(reinterpret_cast<const char*>(b.data()), 8);
  }
}

PointSet read_pointset_binary(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "DPS1", 4) != 0)
    throw std::runtime_error("pointset binary: bad magic");
  std::uint32_t dim = get_u32(is);
  std::uint32_t n = get_u32(is);
  if (dim < 1 || n < 1) throw std::runtime_error("pointset binary: bad dim/n");
  std::vector<double> coords(static_cast<std::size_t>(n) * dim);
  for (double& c : coords) {
    std::array<unsigned char, 8> b{};
    is.read(reinterpret_cast<char*>(b.data()), 8);
    if (!is) throw std::runtime_error("pointset binary: truncated coordinates");
    std::uint64_t bits = 0;
    for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(b[k]) << (8 * k);
    std::memcpy(&c, &bits, 8);
  }
  return PointSet(static_cast<int>(dim), std::move(coords), {"file", "", 0});
}

}  // namespace discrep
