#pragma once

// Brute-force reference for enumeration and quotient dimensions.
//
// Shares nothing with the engine except the final conversion to a Diagram:
// multigraphs come from filling adjacency matrices, isomorphism is tested by
// trying every vertex permutation and every matching of parallel edges, and
// ranks come from dense elimination over cpp_rational.

#include <array>
#include <string>
#include <vector>

#include "beadcalc/diagram.hpp"

namespace oracle {

struct Graph {
  int trivalent = 0;
  std::vector<std::string> label;              // per vertex, "" when trivalent
  std::vector<std::pair<int, int>> ends;       // edge e: half 2e at first, 2e+1 at second
  std::vector<std::array<int, 3>> cyc;         // per trivalent vertex
  std::vector<std::vector<int>> adjacency;     // loop counts on the diagonal

  int vertex_count() const { return static_cast<int>(label.size()); }
  int owner(int h) const { return (h & 1) ? ends[h / 2].second : ends[h / 2].first; }
  bool connected() const;
};

// One graph per adjacency matrix with the prescribed valences and leg labels.
std::vector<Graph> labeled_multigraphs(int trivalent, const std::vector<std::string>& legs);

// Signs (+1/-1) of every half-edge isomorphism a -> b; stops after the
// first one when `first_only`.
std::vector<int> isomorphism_signs(const Graph& a, const Graph& b, bool first_only);

// I, H, X at edge e (both ends trivalent and distinct).
std::array<Graph, 3> ihx(const Graph& g, int e);

struct Result {
  std::vector<Graph> nonzero;  // one per nonvanishing isomorphism class
  int all_classes = 0;         // vanishing ones included
  int dimension = 0;           // after IHX
};

// Degree-d diagrams with the given legs; `connected` keeps connected graphs,
// `need_trivalent` drops the ones without trivalent vertices.
Result quotient(int degree, const std::vector<std::string>& legs, bool connected, bool need_trivalent);

beadcalc::Diagram to_diagram(const Graph& g);

}  // namespace oracle
