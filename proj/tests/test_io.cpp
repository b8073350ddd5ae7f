#include <doctest.h>

#include <sstream>

#include "discrep/pointset.hpp"

using namespace discrep;

TEST_CASE("text round trip preserves every bit") {
  PointSet ps = generate_random(3, 100, 42);
  std::stringstream ss;
  write_pointset_text(ss, ps);
  PointSet back = read_pointset_text(ss);
  CHECK(back.dim() == ps.dim());
  CHECK(back.size() == ps.size());
  CHECK(back.coords() == ps.coords());  // %.17g is lossless for doubles
  CHECK(back.generator().name == ps.generator().name);
}

TEST_CASE("text header is parsed field by field") {
  std::stringstream ss("discrepancy-pointset v1 dim=2 n=2 generator=manual\n"
                       "0 0.5\n1 0.25\n");
  PointSet ps = read_pointset_text(ss);
  CHECK(ps.dim() == 2);
  CHECK(ps.size() == 2);
  CHECK(ps.generator().name == "manual");
  CHECK(ps.point(1)[0] == 1.0);
  CHECK(ps.point(1)[1] == 0.25);
}

TEST_CASE("text reader rejects malformed input") {
  std::stringstream bad_magic("something-else v1 dim=1 n=1\n0.5\n");
  CHECK_THROWS(read_pointset_text(bad_magic));
  std::stringstream bad_version("discrepancy-pointset v9 dim=1 n=1\n0.5\n");
  CHECK_THROWS(read_pointset_text(bad_version));
  std::stringstream truncated("discrepancy-pointset v1 dim=2 n=3 generator=x\n0.1 0.2\n");
  CHECK_THROWS(read_pointset_text(truncated));
  std::stringstream no_dim("discrepancy-pointset v1 n=1 generator=x\n0.5\n");
  CHECK_THROWS(read_pointset_text(no_dim));
  std::stringstream empty;
  CHECK_THROWS(read_pointset_text(empty));
  std::stringstream out_of_range("discrepancy-pointset v1 dim=1 n=1 generator=x\n1.5\n");
  CHECK_THROWS(read_pointset_text(out_of_range));
}

TEST_CASE("binary round trip preserves every bit") {
  PointSet ps = generate_faure_net(3, 3, 3);
  std::stringstream ss;
  write_pointset_binary(ss, ps);
  PointSet back = read_pointset_binary(ss);
  CHECK(back.dim() == ps.dim());
  CHECK(back.coords() == ps.coords());
}

TEST_CASE("binary reader rejects malformed input") {
  std::stringstream bad_magic("NOPE....");
  CHECK_THROWS(read_pointset_binary(bad_magic));

  PointSet ps = generate_random(2, 4, 1);
  std::stringstream ss;
  write_pointset_binary(ss, ps);
  std::string bytes = ss.str();
  std::stringstream truncated(bytes.substr(0, bytes.size() - 5));
  CHECK_THROWS(read_pointset_binary(truncated));
  std::stringstream header_only(bytes.substr(0, 6));
  CHECK_THROWS(read_pointset_binary(header_only));
}

TEST_CASE("writers emit a deterministic byte stream") {
  PointSet ps = generate_van_der_corput(32);
  std::stringstream a, b;
  write_pointset_binary(a, ps);
  write_pointset_binary(b, ps);
  CHECK(a.str() == b.str());
  std::stringstream c, d;
  write_pointset_text(c, ps);
  write_pointset_text(d, ps);
  CHECK(c.str() == d.str());
}
