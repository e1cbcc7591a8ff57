#include "beadcalc/surgery.hpp"

#include <algorithm>

#include "beadcalc/error.hpp"

namespace beadcalc {

HalfGraph::HalfGraph(const Diagram& d) {
  const int n = d.vertex_count();
  leg_.assign(n, false);
  vertex_alive_.assign(n, true);
  label_.assign(n, {});
  cyclic_.assign(n, CyclicOrder{-1, -1, -1});
  for (int v = 0; v < n; ++v) {
    if (d.is_leg(v)) {
      leg_[v] = true;
      label_[v] = d.leg_label(v);
      cyclic_[v][0] = d.incident(v).front();
    } else {
      cyclic_[v] = d.cyclic(v);
    }
  }
  owner_.resize(d.half_edge_count());
  mate_.resize(d.half_edge_count());
  half_alive_.assign(d.half_edge_count(), true);
  for (int h = 0; h < d.half_edge_count(); ++h) {
    owner_[h] = d.vertex_of(h);
    mate_[h] = Diagram::partner(h);
  }
}

int HalfGraph::add_trivalent() {
  leg_.push_back(false);
  vertex_alive_.push_back(true);
  label_.emplace_back();
  cyclic_.push_back(CyclicOrder{-1, -1, -1});
  return vertex_count() - 1;
}

int HalfGraph::add_leg(std::string label) {
  int v = add_trivalent();
  leg_[v] = true;
  label_[v] = std::move(label);
  return v;
}

int HalfGraph::add_half(int v) {
  owner_.push_back(v);
  mate_.push_back(-1);
  half_alive_.push_back(true);
  return static_cast<int>(owner_.size()) - 1;
}

std::array<int, 2> HalfGraph::connect(int a, int b) {
  int ha = add_half(a);
  int hb = add_half(b);
  pair(ha, hb);
  return {ha, hb};
}

void HalfGraph::pair(int h1, int h2) {
  mate_[h1] = h2;
  mate_[h2] = h1;
}

void HalfGraph::remove_vertex(int v) { vertex_alive_[v] = false; }

void HalfGraph::remove_half(int h) { half_alive_[h] = false; }

Diagram HalfGraph::to_diagram() const {
  const int n = vertex_count();
  std::vector<int> renumber(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (vertex_alive_[v] && !leg_[v]) renumber[v] = next++;
  const int trivalent = next;
  std::vector<std::string> legs;
  for (int v = 0; v < n; ++v)
    if (vertex_alive_[v] && leg_[v]) {
      renumber[v] = next++;
      legs.push_back(label_[v]);
    }

  std::vector<int> half_id(owner_.size(), -1);
  std::vector<Edge> edges;
  for (std::size_t h = 0; h < owner_.size(); ++h) {
    if (!half_alive_[h] || half_id[h] >= 0) continue;
    int m = mate_[h];
    if (m < 0 || !half_alive_[m] || renumber[owner_[h]] < 0 || renumber[owner_[m]] < 0)
      throw Error(ErrorKind::Malformed, "dangling half-edge during rewiring");
    int e = static_cast<int>(edges.size());
    edges.push_back(Edge{renumber[owner_[h]], renumber[owner_[m]]});
    half_id[h] = 2 * e;
    half_id[m] = 2 * e + 1;
  }
  std::vector<CyclicOrder> cyclic(trivalent);
  for (int v = 0; v < n; ++v) {
    if (!vertex_alive_[v] || leg_[v]) continue;
    CyclicOrder c;
    for (int i = 0; i < 3; ++i) {
      int h = cyclic_[v][i];
      c[i] = (h >= 0 && h < static_cast<int>(half_id.size())) ? half_id[h] : -1;
    }
    cyclic[renumber[v]] = c;
  }
  return Diagram(trivalent, std::move(legs), std::move(edges), std::move(cyclic));
}

CyclicOrder rotate_to(const CyclicOrder& c, int first) {
  for (int i = 0; i < 3; ++i)
    if (c[i] == first) return {c[i], c[(i + 1) % 3], c[(i + 2) % 3]};
  throw Error(ErrorKind::Malformed, "half-edge not in cyclic order");
}

std::array<Diagram, 3> ihx_terms(const Diagram& d, int edge) {
  const Edge& e = d.edges()[edge];
  const int u = e.tail, w = e.head;
  if (u == w || d.is_leg(u) || d.is_leg(w))
    throw Error(ErrorKind::Malformed, "IHX needs an edge between two distinct trivalent vertices");
  const int eu = 2 * edge, ew = 2 * edge + 1;
  const CyclicOrder cu = rotate_to(d.cyclic(u), eu);
  const CyclicOrder cw = rotate_to(d.cyclic(w), ew);
  const int a = cu[1], b = cu[2], c = cw[1], dd = cw[2];

  // I keeps the pairs {a,b},{c,d}; H regroups as {b,c},{d,a}; X as {b,d},{c,a}.
  HalfGraph h(d);
  h.set_owner(c, u);
  h.set_owner(a, w);
  h.cyclic(u) = {eu, b, c};
  h.cyclic(w) = {ew, dd, a};

  HalfGraph x(d);
  x.set_owner(dd, u);
  x.set_owner(a, w);
  x.cyclic(u) = {eu, b, dd};
  x.cyclic(w) = {ew, c, a};

  return {d, h.to_diagram(), x.to_diagram()};
}

Diagram attach_leg(const Diagram& d, int edge, const std::string& label) {
  HalfGraph g(d);
  const int tail_half = 2 * edge;
  const int head_half = 2 * edge + 1;
  int m = g.add_trivalent();
  int leg = g.add_leg(label);
  int m_in = g.add_half(m);
  int m_out = g.add_half(m);
  g.pair(tail_half, m_in);
  g.pair(m_out, head_half);
  auto [m_leg, leg_half] = g.connect(m, leg);
  g.cyclic(m) = {m_in, m_leg, m_out};
  g.cyclic(leg) = {leg_half, -1, -1};
  return g.to_diagram();
}

Diagram disjoint_union(const std::vector<Diagram>& parts) {
  DiagramBuilder b;
  for (const Diagram& d : parts) {
    std::vector<int> vid(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v)
      vid[v] = d.is_leg(v) ? b.add_leg(d.leg_label(v)) : b.add_trivalent();
    std::vector<int> eid(d.edge_count());
    for (int e = 0; e < d.edge_count(); ++e) eid[e] = b.add_edge(vid[d.edges()[e].tail], vid[d.edges()[e].head]);
    auto map_half = [&](int h) { return 2 * eid[Diagram::edge_of(h)] + (h & 1); };
    for (int v = 0; v < d.trivalent_count(); ++v) {
      const CyclicOrder& c = d.cyclic(v);
      b.set_cyclic(vid[v], {map_half(c[0]), map_half(c[1]), map_half(c[2])});
    }
  }
  return b.build();
}

}  // namespace beadcalc
