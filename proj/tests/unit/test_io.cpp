#include <doctest.h>

#include "beadcalc/error.hpp"
#include "beadcalc/io.hpp"
#include "random_diagrams.hpp"

using namespace beadcalc;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Malformed;
}

}  // namespace

TEST_CASE("diagram round trip") {
  testing::Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    Diagram d = testing::random_diagram(rng, 2 + 2 * (i % 3), i % 2 ? std::vector<std::string>{"x", "*"} : std::vector<std::string>{}, false);
    io::Json j = io::diagram_to_json(d);
    CHECK(io::diagram_from_json(io::parse(j.dump())) == d);
  }
}

TEST_CASE("self-loop ends") {
  auto j = io::parse(R"({"trivalent":1,"legs":["a"],"edges":[[0,1],[0,0]],"cyclic":{"0":[0,"1+","1-"]}})");
  Diagram d = io::diagram_from_json(j);
  CHECK(d.cyclic(0) == CyclicOrder{0, 2, 3});
  auto u = io::parse(R"({"trivalent":1,"legs":["a"],"edges":[[0,1],[0,0]],"cyclic":{"0":[0,"1+","1−"]}})");
  CHECK(io::diagram_from_json(u) == d);
  auto bad = io::parse(R"({"trivalent":1,"legs":["a"],"edges":[[0,1],[0,0]],"cyclic":{"0":[0,1,1]}})");
  CHECK(kind_of([&] { io::diagram_from_json(bad); }) == ErrorKind::IncompleteCyclicOrder);
}

TEST_CASE("malformed input") {
  CHECK(kind_of([] { io::parse("{"); }) == ErrorKind::Malformed);
  CHECK(kind_of([] { io::diagram_from_json(io::parse(R"({"trivalent":1})")); }) == ErrorKind::Malformed);
  CHECK(kind_of([] { io::diagram_from_json(io::parse(R"({"trivalent":0,"legs":["a","b"],"edges":[[0,5]]})")); }) ==
        ErrorKind::Malformed);
  CHECK(kind_of([] { io::vector_from_json(io::parse(R"([{"coeff":"1","diagram":"00"}])")); }) == ErrorKind::Malformed);
}

TEST_CASE("combination round trip") {
  auto j = io::parse(R"([{"coeff":"3/4","diagram":{"trivalent":2,"legs":[],"edges":[[0,1],[0,1],[0,1]],"cyclic":{"0":[0,1,2],"1":[0,2,1]}}}])");
  Vector v = io::vector_from_json(j);
  REQUIRE(v.size() == 1);
  CHECK(v.begin()->second == Rational(-3, 4));
  CHECK(io::vector_from_json(io::vector_to_json(v)) == v);
}

TEST_CASE("beaded input") {
  auto j = io::parse(R"([{"coeff":"2","diagram":{"trivalent":2,"legs":[],"edges":[[0,1],[0,1],[0,1]],
                      "cyclic":{"0":[0,1,2],"1":[0,1,2]},"beads":{"1":"b + b^2"}}}])");
  BeadedComb v = io::beaded_from_json_any(j);
  CHECK(v.size() == 2);
  CHECK(io::beaded_from_json_any(io::beaded_comb_to_json(v)) == v);
  testing::Rng rng(9);
  Diagram d = testing::random_closed(rng, 3);
  BeadedDiagram bd(d, {LaurentPoly::parse("2*b^3 - b^-1 + 1/2"), LaurentPoly::one(), LaurentPoly::one(),
                       LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::one()});
  BeadedDiagram back = io::beaded_from_json(io::parse(io::beaded_to_json(bd).dump()));
  CHECK(back.diagram() == d);
  CHECK(back.beads() == bd.beads());
}
