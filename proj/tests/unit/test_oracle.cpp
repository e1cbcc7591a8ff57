#include <doctest.h>

#include <set>

#include "beadcalc/canonical.hpp"
#include "beadcalc/relations.hpp"
#include "frozen.hpp"
#include "oracle.hpp"
#include "random_diagrams.hpp"

using namespace beadcalc;

namespace {

void compare(const std::map<int, frozen::Counts>& table, const std::vector<std::string>& legs, bool connected,
             bool need_trivalent) {
  RelationEngine engine;
  for (auto [degree, expected] : table) {
    CAPTURE(degree);
    oracle::Result r = oracle::quotient(degree, legs, connected, need_trivalent);
    CHECK(static_cast<int>(r.nonzero.size()) == expected.classes);
    CHECK(r.dimension == expected.dimension);

    // Same classes as the engine, one canonical form per oracle class.
    std::set<Encoding> from_oracle;
    for (const auto& g : r.nonzero) {
      CanonicalForm f = canonicalize(oracle::to_diagram(g));
      CHECK(!f.zero());
      from_oracle.insert(f.encoding);
    }
    CHECK(from_oracle.size() == r.nonzero.size());
    std::set<Encoding> from_engine;
    for (const auto& f : enumerate(engine.catalog(), degree, legs, connected || need_trivalent))
      if (!need_trivalent || read_header(f.encoding).trivalent > 0) from_engine.insert(f.encoding);
    CHECK(from_engine == from_oracle);
  }
}

}  // namespace

TEST_CASE("oracle reproduces the frozen tables and agrees with enumeration") {
  compare(frozen::kClosed, {}, false, false);
  compare(frozen::kClosedConnected, {}, true, false);
  compare(frozen::kF3, {"1", "2", "3"}, true, true);
  compare(frozen::kTwoLegs, {"1", "2"}, false, false);
  compare(frozen::kOneLeg, {"1"}, false, false);
}

TEST_CASE("oracle isomorphisms agree with canonical signs") {
  // Random labeled multigraphs with random cyclic orders: whenever the naive
  // search finds an isomorphism, the canonical forms agree up to its sign.
  testing::Rng rng(11);
  auto graphs = oracle::labeled_multigraphs(4, {"1", "2"});
  for (int i = 0; i < 150; ++i) {
    oracle::Graph a = graphs[rng() % graphs.size()];
    oracle::Graph b = graphs[rng() % graphs.size()];
    for (auto& c : a.cyc)
      if (rng() % 2) std::swap(c[1], c[2]);
    for (auto& c : b.cyc)
      if (rng() % 2) std::swap(c[1], c[2]);
    CanonicalForm fa = canonicalize(oracle::to_diagram(a));
    CanonicalForm fb = canonicalize(oracle::to_diagram(b));
    auto signs = oracle::isomorphism_signs(a, b, false);
    CHECK((fa.encoding == fb.encoding) == !signs.empty());
    if (signs.empty()) continue;
    bool odd_auto = std::set<int>(signs.begin(), signs.end()).size() > 1;
    CHECK(fa.zero() == odd_auto);
    CHECK(fb.zero() == odd_auto);
    if (!odd_auto) CHECK(fa.sign == signs[0] * fb.sign);
  }
}
