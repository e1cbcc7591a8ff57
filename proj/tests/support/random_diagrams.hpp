#pragma once

// Random diagrams and random presentations of the same diagram for property tests.

#include <random>
#include <string>
#include <vector>

#include "beadcalc/beads.hpp"

namespace beadcalc::testing {

using Rng = std::mt19937_64;

// Random pairing of half-edges: `trivalent` vertices with three slots, one
// slot per leg. Retries until the result is connected when asked to.
Diagram random_diagram(Rng& rng, int trivalent, const std::vector<std::string>& legs, bool connected);

// Closed connected diagram with the given loop degree (>= 2), so 2(L-1) vertices.
Diagram random_closed(Rng& rng, int loop_degree);

// Renumbered vertices and edges, flipped edges and rotated cyclic orders.
struct Relabeled {
  Diagram diagram;
  std::vector<int> edge_map;   // old edge -> new edge
  std::vector<bool> flipped;   // per old edge
  Cocycle transport(const Cocycle& x) const;
};

Relabeled random_relabel(Rng& rng, const Diagram& d);

// Reversal of one random trivalent vertex; -1 when there is none.
int random_trivalent(Rng& rng, const Diagram& d);

Cocycle random_cocycle(Rng& rng, const Diagram& d, int bound);
Cocycle random_push(Rng& rng, const Diagram& d, Cocycle x, int moves, int bound);

}  // namespace beadcalc::testing
