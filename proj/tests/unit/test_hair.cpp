#include <doctest.h>

#include "beadcalc/error.hpp"
#include "beadcalc/hair.hpp"
#include "random_diagrams.hpp"

using namespace beadcalc;

namespace {

Diagram theta() {
  return Diagram(2, {}, {{0, 1}, {0, 1}, {0, 1}}, {CyclicOrder{0, 2, 4}, CyclicOrder{1, 3, 5}});
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Malformed;
}

Vector hairy(const Diagram& d, std::vector<int> k) { return to_vector(plant_hairs(d, k)); }

}  // namespace

TEST_CASE("planting legs") {
  Diagram th = theta();
  Diagram one = plant_hairs(th, {0, 2, 0});
  CHECK(one.degree() == th.degree() + 2);
  CHECK(one.leg_count() == 2);
  for (const auto& l : one.legs()) CHECK(l == "*");
  CHECK(one.loop_degree() == 2);
}

TEST_CASE("expansion examples") {
  Diagram th = theta();
  Vector bare = to_vector(th);

  Graded zero = hair_expand_presentation(th, {0, 0, 0}, 5);
  REQUIRE(zero.size() == 1);
  CHECK(zero.at(1) == bare);

  // Exponent 1: 1 + leg. Theta with one hair is AS-zero, so nothing survives in degree 2.
  CHECK(hairy(th, {0, 1, 0}).empty());
  Graded one = hair_expand_presentation(th, {0, 1, 0}, 2);
  CHECK(one.size() == 1);
  CHECK(one.at(1) == bare);

  // Exponent 2: 1 + 2 leg + (4/2!) two legs.
  Graded two = hair_expand_presentation(th, {0, 2, 0}, 3);
  REQUIRE(!hairy(th, {0, 2, 0}).empty());
  CHECK(two.at(3) == Rational(2) * hairy(th, {0, 2, 0}));

  // Several edges multiply their series.
  Graded mixed = hair_expand_presentation(th, {3, -1, 0}, 3);
  Vector expected = Rational(9, 2) * hairy(th, {2, 0, 0}) + Rational(-3) * hairy(th, {1, 1, 0}) +
                    Rational(1, 2) * hairy(th, {0, 2, 0});
  CHECK(mixed.at(3) == expected);

  CHECK(kind_of([&] { hair_expand_presentation(th, {0, 0, 0}, 0); }) == ErrorKind::TruncationTooSmall);
}

TEST_CASE("hair of combinations") {
  RelationEngine engine;
  Diagram th = theta();
  BeadedComb empty;
  CHECK(hair(empty, 3, engine).empty());
  BeadedComb z;
  z.add(BeadedKey{canonicalize(th).encoding, {0, 0}}, 1);
  Graded h = hair(z, 4, engine);
  REQUIRE(h.size() == 1);
  CHECK(h.at(1) == to_vector(th));
  CHECK(kind_of([&] { hair(z, 8, engine); }) == ErrorKind::CapExceeded);

  auto kc = kernel_check(z, 3, engine);
  CHECK(kc.at(1) == false);
  CHECK(kc.at(2) == true);
  BeadedComb cancel = z - z;
  for (auto [d, ok] : kernel_check(cancel, 3, engine)) CHECK(ok);
  for (auto [d, ok] : kernel_check(BeadedComb(), 3, engine)) CHECK(ok);
}

TEST_CASE("PUSH well-definedness and truncation coherence") {
  RelationEngine engine;
  testing::Rng rng(41);
  int nontrivial = 0;
  for (int i = 0; i < 40; ++i) {
    Diagram d = testing::random_closed(rng, 2 + i % 2);
    const int D = d.degree() + 2;
    Cocycle x = testing::random_cocycle(rng, d, 2);
    Cocycle y = testing::random_push(rng, d, x, 2, 2);
    Graded a = reduce_graded(hair_expand_presentation(d, x, D), D, engine);
    Graded b = reduce_graded(hair_expand_presentation(d, y, D), D, engine);
    CHECK(a == b);
    if (a.count(D)) ++nontrivial;
    Graded shorter = reduce_graded(hair_expand_presentation(d, x, D - 1), D - 1, engine);
    a.erase(D);
    CHECK(a == shorter);
  }
  CHECK(nontrivial > 0);
}
