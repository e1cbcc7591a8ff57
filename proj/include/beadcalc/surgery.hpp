#pragma once

// Mutable half-edge graph used for local rewiring (subdivision, IHX, vertex
// insertion, leg planting). Converted back to a validated Diagram at the end.

#include <array>
#include <string>
#include <vector>

#include "beadcalc/diagram.hpp"

namespace beadcalc {

class HalfGraph {
 public:
  HalfGraph() = default;
  explicit HalfGraph(const Diagram& d);

  int add_trivalent();
  int add_leg(std::string label);
  // New edge between two vertices; returns {half at a, half at b}.
  std::array<int, 2> connect(int a, int b);
  // Unpaired half-edge at v; pair() it before conversion.
  int add_half(int v);
  // Pairs two existing halves (their previous mates must have been re-paired).
  void pair(int h1, int h2);
  void remove_vertex(int v);
  void remove_half(int h);

  int owner(int h) const { return owner_[h]; }
  int mate(int h) const { return mate_[h]; }
  void set_owner(int h, int v) { owner_[h] = v; }
  CyclicOrder& cyclic(int v) { return cyclic_[v]; }
  const CyclicOrder& cyclic(int v) const { return cyclic_[v]; }
  // The single half-edge of a leg.
  int leg_half(int v) const { return cyclic_[v][0]; }
  bool is_leg(int v) const { return leg_[v]; }
  const std::string& label(int v) const { return label_[v]; }
  void set_label(int v, std::string label) { label_[v] = std::move(label); }
  int vertex_count() const { return static_cast<int>(leg_.size()); }

  // Surviving vertices renumbered trivalent-first (relative order kept);
  // edges ordered by their lower half id.
  Diagram to_diagram() const;

 private:
  std::vector<bool> leg_;
  std::vector<bool> vertex_alive_;
  std::vector<std::string> label_;
  std::vector<CyclicOrder> cyclic_;
  std::vector<int> owner_;
  std::vector<int> mate_;
  std::vector<bool> half_alive_;
};

// Rotate a cyclic order so that it starts with `first`.
CyclicOrder rotate_to(const CyclicOrder& c, int first);

// The three IHX terms at an edge joining two distinct trivalent vertices,
// in the order I, H, X; the relation vector is I - H + X.
std::array<Diagram, 3> ihx_terms(const Diagram& d, int edge);

// Subdivide an edge and attach a new leg at the midpoint.
Diagram attach_leg(const Diagram& d, int edge, const std::string& label);

Diagram disjoint_union(const std::vector<Diagram>& parts);

}  // namespace beadcalc
