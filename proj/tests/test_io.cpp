#include <doctest.h>

#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "brocard/circle_mounted.hpp"
#include "brocard/io.hpp"
#include "brocard/report.hpp"

using namespace brocard;

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.0) == "-2");
  for (double v : {kPi, 1.0 / 3.0, 1e-300, -7.123456789012345e17,
                   std::numeric_limits<double>::denorm_min()}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("csv round trip is bit exact") {
  const LocusSamples s =
      sample_mounted_locus(MountedFamilyConfig::antipodal(1.0), Which::First, 1024, 0.5);
  std::stringstream buf;
  write_locus_csv(buf, s);
  CHECK(buf.str().rfind("t,x,y\n", 0) == 0);
  const LocusSamples back = read_locus_csv(buf);
  REQUIRE(back.size() == s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    CHECK(back.samples[k].t == s.samples[k].t);
    CHECK(back.samples[k].p == s.samples[k].p);
  }
}

TEST_CASE("malformed csv") {
  std::istringstream empty("");
  CHECK_THROWS_AS(read_locus_csv(empty), std::runtime_error);
  std::istringstream header("t;x;y\n0;1;2\n");
  CHECK_THROWS_AS(read_locus_csv(header), std::runtime_error);
  std::istringstream fields("t,x,y\n0,1\n");
  CHECK_THROWS_AS(read_locus_csv(fields), std::runtime_error);
  std::istringstream number("t,x,y\n0,1,abc\n");
  CHECK_THROWS_AS(read_locus_csv(number), std::runtime_error);
}

TEST_CASE("report checks") {
  VerificationReport r;
  CHECK(r.check_close("a", "g", 1, "ref", 1.0, 1.0 + 1e-10, 1e-9).pass);
  CHECK_FALSE(r.check_close("b", "g", 1, "ref", 1.0, 1.1, 1e-9).pass);
  CHECK(r.check_relative("c", "g", 2, "ref", 100.0, 100.00005, 1e-6).pass);
  CHECK_FALSE(r.check_relative("d", "g", 2, "ref", 100.0, 100.001, 1e-6).pass);
  CHECK(r.check_below("e", "g", 3, "ref", 0.5, 1.0).pass);
  CHECK_FALSE(r.check_below("f", "g", 3, "ref", 1.0, 1.0).pass);
  CHECK_FALSE(r.record("i", "g", "ref", 0.0, 2.0, 1.0).pass);
  CHECK(r.passed() == 4);
  CHECK(r.failed() == 3);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("report json round trip") {
  VerificationReport r;
  r.check_close("x.one", "g", 4, "ref one", 1.0 / 3.0, 0.3333, 1e-3);
  r.check_below("x.two", "g", 5, "ref two", 1e-17, 1e-9).note = "with note";
  const nlohmann::json j = r.to_json();
  CHECK(j["summary"]["pass"] == 2);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["entries"][0]["id"] == "x.one");
  const VerificationReport back = VerificationReport::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(back.entries()[1].note == "with note");
  CHECK(back.entries()[0].expected == 1.0 / 3.0);
}
