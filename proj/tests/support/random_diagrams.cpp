#include "random_diagrams.hpp"

#include <algorithm>
#include <numeric>

namespace beadcalc::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Diagram random_diagram(Rng& rng, int trivalent, const std::vector<std::string>& legs, bool connected) {
  for (;;) {
    DiagramBuilder b;
    std::vector<int> slots;
    for (int v = 0; v < trivalent; ++v) {
      int id = b.add_trivalent();
      slots.insert(slots.end(), {id, id, id});
    }
    for (const auto& l : legs) slots.push_back(b.add_leg(l));
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<std::vector<int>> at(trivalent + legs.size());
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2) {
      int e = b.add_edge(slots[i], slots[i + 1]);
      at[slots[i]].push_back(2 * e);
      at[slots[i + 1]].push_back(2 * e + 1);
    }
    for (int v = 0; v < trivalent; ++v) {
      auto& h = at[v];
      std::shuffle(h.begin(), h.end(), rng);
      b.set_cyclic(v, {h[0], h[1], h[2]});
    }
    Diagram d = b.build();
    if (!connected || d.connected()) return d;
  }
}

Diagram random_closed(Rng& rng, int loop_degree) {
  return random_diagram(rng, 2 * (loop_degree - 1), {}, true);
}

Cocycle Relabeled::transport(const Cocycle& x) const {
  Cocycle y(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) y[edge_map[e]] = flipped[e] ? -x[e] : x[e];
  return y;
}

Relabeled random_relabel(Rng& rng, const Diagram& d) {
  const int t = d.trivalent_count();
  const int n = d.vertex_count();
  std::vector<int> vperm(n);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.begin() + t, rng);
  std::shuffle(vperm.begin() + t, vperm.end(), rng);

  const int m = d.edge_count();
  Relabeled r;
  r.edge_map.resize(m);
  std::iota(r.edge_map.begin(), r.edge_map.end(), 0);
  std::shuffle(r.edge_map.begin(), r.edge_map.end(), rng);
  r.flipped.resize(m);
  for (int e = 0; e < m; ++e) r.flipped[e] = uniform(rng, 0, 1) == 1;

  std::vector<Edge> edges(m);
  std::vector<std::string> legs(d.leg_count());
  for (int v = t; v < n; ++v) legs[vperm[v] - t] = d.leg_label(v);
  for (int e = 0; e < m; ++e) {
    Edge old = d.edges()[e];
    if (r.flipped[e]) std::swap(old.tail, old.head);
    edges[r.edge_map[e]] = Edge{vperm[old.tail], vperm[old.head]};
  }
  auto half = [&](int h) {
    int e = Diagram::edge_of(h);
    int end = (h & 1) ^ (r.flipped[e] ? 1 : 0);
    return 2 * r.edge_map[e] + end;
  };
  std::vector<CyclicOrder> cyclic(t);
  for (int v = 0; v < t; ++v) {
    CyclicOrder c = d.cyclic(v);
    std::rotate(c.begin(), c.begin() + uniform(rng, 0, 2), c.end());
    cyclic[vperm[v]] = {half(c[0]), half(c[1]), half(c[2])};
  }
  r.diagram = Diagram(t, std::move(legs), std::move(edges), std::move(cyclic));
  return r;
}

int random_trivalent(Rng& rng, const Diagram& d) {
  return d.trivalent_count() == 0 ? -1 : uniform(rng, 0, d.trivalent_count() - 1);
}

Cocycle random_cocycle(Rng& rng, const Diagram& d, int bound) {
  Cocycle x(d.edge_count());
  for (auto& v : x) v = uniform(rng, -bound, bound);
  return x;
}

Cocycle random_push(Rng& rng, const Diagram& d, Cocycle x, int moves, int bound) {
  for (int i = 0; i < moves; ++i)
    x = push_move(d, std::move(x), uniform(rng, 0, d.vertex_count() - 1), uniform(rng, -bound, bound));
  return x;
}

}  // namespace beadcalc::testing
