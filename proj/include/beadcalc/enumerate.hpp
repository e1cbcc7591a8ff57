#pragma once

// Exhaustive generation of uni-trivalent diagrams up to isomorphism.
//
// Connected diagrams with unlabeled legs are grown by planting a leg on every
// edge of the diagrams with one trivalent vertex and one leg fewer; closed
// connected diagrams come from joining the two legs of a two-legged one.
// Labels are assigned afterwards and disconnected diagrams are built as
// multisets of connected components.

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "beadcalc/canonical.hpp"

namespace beadcalc {

inline constexpr int kDefaultMaxDegree = 6;

class DiagramCatalog {
 public:
  // Every isomorphism class, vanishing ones included, with `trivalent`
  // trivalent vertices and the given leg labels; sorted by encoding.
  std::vector<Encoding> classes(int trivalent, std::vector<std::string> legs, bool connected);

 private:
  const std::vector<Encoding>& unlabeled(int trivalent, int legs);
  std::vector<Encoding> build_unlabeled(int trivalent, int legs);

  std::recursive_mutex mutex_;
  std::map<std::pair<int, int>, std::vector<Encoding>> unlabeled_;
  std::map<std::tuple<int, std::vector<std::string>, bool>, std::vector<Encoding>> labeled_;
};

// Number of trivalent vertices of a diagram with `degree` and `legs` legs,
// or -1 when no uni-trivalent graph has those counts.
int trivalent_for(int degree, int legs);

// Nonvanishing classes of the given degree in deterministic (encoding) order.
// Throws CapExceeded when degree > cap.
std::vector<CanonicalForm> enumerate(DiagramCatalog& catalog, int degree, const std::vector<std::string>& legs,
                                     bool connected, int cap = kDefaultMaxDegree);

}  // namespace beadcalc
