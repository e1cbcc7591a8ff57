#pragma once

// Diagrams with beads in Q[b, b^-1].
//
// Monomial beads b^n on the oriented edges form an integer 1-cocycle; PUSH
// moves change it by coboundaries, so a beaded diagram with monomial beads is
// a pair (closed diagram, class in H^1). Classes are stored as coordinates on
// the co-tree edges of a breadth-first spanning forest of the canonical
// representative, minimized over its automorphisms.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "beadcalc/canonical.hpp"
#include "beadcalc/laurent.hpp"
#include "beadcalc/linear.hpp"

namespace beadcalc {

// Bead exponent per edge, read along the stored edge orientation.
using Cocycle = std::vector<long long>;

struct BeadedKey {
  Encoding diagram;
  std::vector<long long> cls;

  friend bool operator==(const BeadedKey&, const BeadedKey&) = default;
  friend bool operator<(const BeadedKey& a, const BeadedKey& b) {
    if (a.diagram != b.diagram) return a.diagram < b.diagram;
    return a.cls < b.cls;
  }
};

using BeadedComb = LinComb<BeadedKey>;

struct BeadedForm {
  BeadedKey key;
  int sign = 1;
  bool zero() const noexcept { return sign == 0; }
};

class BeadedDiagram {
 public:
  // `beads` has one entry per edge (stored orientation); the diagram must be closed.
  BeadedDiagram(Diagram diagram, std::vector<LaurentPoly> beads);

  const Diagram& diagram() const noexcept { return diagram_; }
  const std::vector<LaurentPoly>& beads() const noexcept { return beads_; }
  // Bead read along a half-edge's outgoing orientation: f(-e) = bar f(e).
  LaurentPoly bead_at(int half) const;
  // Same beaded diagram with one edge stored in the opposite direction.
  BeadedDiagram reoriented(int edge) const;

 private:
  Diagram diagram_;
  std::vector<LaurentPoly> beads_;
};

struct SpanningForest {
  std::vector<bool> tree;             // per edge
  std::vector<int> cotree;            // ascending edge ids
  std::vector<std::pair<int, int>> steps;  // (tree edge, child vertex) in BFS order
};

// Breadth-first from the least unvisited vertex, edges in id order.
SpanningForest spanning_forest(const Diagram& d);

// Coordinates of x modulo coboundaries: x is shifted by a coboundary to vanish
// on the forest, and the co-tree values are returned.
std::vector<long long> cotree_coordinates(const Diagram& d, const SpanningForest& forest, const Cocycle& x);

// The representative vanishing on the forest.
Cocycle class_cocycle(const Diagram& d, const SpanningForest& forest, const std::vector<long long>& cls);

// x + amount * coboundary of the indicator of `vertex` (one PUSH move).
Cocycle push_move(const Diagram& d, Cocycle x, int vertex, long long amount);

// Normal forms for one diagram; the labeling is computed once.
class BeadNormalizer {
 public:
  explicit BeadNormalizer(const Diagram& d);
  BeadedForm normalize(const Cocycle& x) const;
  const Diagram& representative() const noexcept { return rep_; }
  const SpanningForest& forest() const noexcept { return forest_; }

 private:
  const Diagram* d_;
  FullLabeling labeling_;
  Diagram rep_;
  SpanningForest forest_;
};

BeadedForm push_normal_form(const Diagram& d, const Cocycle& x);

// Expands Laurent beads monomial by monomial.
BeadedComb expand_multilinear(const BeadedDiagram& bd);

// Cocycle on the canonical representative vanishing on its forest.
Cocycle key_cocycle(const BeadedKey& key, Diagram* rep = nullptr);

long long bead_degree(const std::vector<long long>& cls);
std::map<long long, BeadedComb> split_by_bead_degree(const BeadedComb& v);

// Forgets zero classes; NonzeroBeadDegree otherwise.
Vector psi(const BeadedComb& v);
// Classical closed diagrams as zero-class beaded ones.
BeadedComb embed_classical(const Vector& v);
// Multiplies classes by p (bead degree 1 -> p) and back.
BeadedComb phi(long long p, const BeadedComb& v);
BeadedComb unphi(long long p, const BeadedComb& v);

// Beaded IHX at an edge joining two distinct trivalent vertices. The cocycle
// is first pushed to vanish on `edge`, then I - H + X is formed with the same
// exponents on every other edge.
BeadedComb beaded_ihx(const Diagram& d, const Cocycle& x, int edge);
// The same relation from a cocycle on the graph with `edge` collapsed
// (indexed by the remaining edges in order), pulled back with 0 on `edge`.
BeadedComb beaded_ihx_collapsed(const Diagram& d, int edge, const Cocycle& collapsed);

}  // namespace beadcalc
