#pragma once

// Uni-trivalent diagrams stored as half-edge structures.
//
// Vertices 0..trivalent-1 are trivalent, the remaining ones are legs (one per
// entry of `legs`, in order). Edge e has two half-edges: 2e sits at its tail,
// 2e+1 at its head. A trivalent vertex carries a cyclic order of its three
// half-edges; self-loops occupy two slots at one vertex.

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace beadcalc {

// Label of an unlabeled hair. Legs carrying it are interchangeable.
inline constexpr std::string_view kHairLabel = "*";

struct Edge {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

using CyclicOrder = std::array<int, 3>;

class Diagram {
 public:
  Diagram() = default;

  // Validates; throws beadcalc::Error (BadValence, IncompleteCyclicOrder,
  // DuplicateLegLabel, Malformed).
  Diagram(int trivalent, std::vector<std::string> legs, std::vector<Edge> edges,
          std::vector<CyclicOrder> cyclic);

  int trivalent_count() const noexcept { return trivalent_; }
  int leg_count() const noexcept { return static_cast<int>(legs_.size()); }
  int vertex_count() const noexcept { return trivalent_ + leg_count(); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int half_edge_count() const noexcept { return 2 * edge_count(); }

  const std::vector<std::string>& legs() const noexcept { return legs_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<CyclicOrder>& cyclic_orders() const noexcept { return cyclic_; }
  const CyclicOrder& cyclic(int v) const { return cyclic_[v]; }

  bool is_leg(int v) const noexcept { return v >= trivalent_; }
  const std::string& leg_label(int v) const { return legs_[v - trivalent_]; }

  static constexpr int edge_of(int half) noexcept { return half >> 1; }
  static constexpr int partner(int half) noexcept { return half ^ 1; }
  int vertex_of(int half) const {
    const Edge& e = edges_[edge_of(half)];
    return (half & 1) ? e.head : e.tail;
  }
  bool is_self_loop(int edge) const { return edges_[edge].tail == edges_[edge].head; }

  // Half-edges incident to v, in increasing id order.
  const std::vector<int>& incident(int v) const { return incident_[v]; }

  // Half of the total vertex count.
  int degree() const noexcept { return vertex_count() / 2; }
  int component_count() const;
  bool connected() const { return component_count() <= 1; }
  // Rank of the first homology of the underlying graph.
  int loop_degree() const;
  bool has_self_loop() const;

  // Vertex sets of connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<int>> components() const;

  // Same diagram with the cyclic order at v reversed (one AS move).
  Diagram with_reversed_vertex(int v) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.trivalent_ == b.trivalent_ && a.legs_ == b.legs_ && a.edges_ == b.edges_ &&
           a.cyclic_ == b.cyclic_;
  }

 private:
  int trivalent_ = 0;
  std::vector<std::string> legs_;
  std::vector<Edge> edges_;
  std::vector<CyclicOrder> cyclic_;
  std::vector<std::vector<int>> incident_;
};

// Incremental construction with vertices of either kind created in any order.
// build() renumbers trivalent vertices first (creation order), then legs.
class DiagramBuilder {
 public:
  int add_trivalent();
  int add_leg(std::string label);
  // Returns the edge id; half 2e sits at `tail`, 2e+1 at `head`.
  int add_edge(int tail, int head);
  void set_cyclic(int v, CyclicOrder halves);
  Diagram build() const;

 private:
  struct Node {
    bool leg = false;
    std::string label;
    CyclicOrder cyclic{-1, -1, -1};
  };
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

}  // namespace beadcalc
