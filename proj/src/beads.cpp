#include "beadcalc/beads.hpp"

#include <deque>
#include <numeric>

#include "beadcalc/error.hpp"
#include "beadcalc/surgery.hpp"

namespace beadcalc {

BeadedDiagram::BeadedDiagram(Diagram diagram, std::vector<LaurentPoly> beads)
    : diagram_(std::move(diagram)), beads_(std::move(beads)) {
  if (diagram_.leg_count() != 0) throw Error(ErrorKind::Malformed, "beaded diagrams must be closed");
  if (beads_.empty()) beads_.assign(diagram_.edge_count(), LaurentPoly::one());
  if (static_cast<int>(beads_.size()) != diagram_.edge_count())
    throw Error(ErrorKind::Malformed, "one bead per edge expected");
}

LaurentPoly BeadedDiagram::bead_at(int half) const {
  const LaurentPoly& f = beads_[Diagram::edge_of(half)];
  return (half & 1) ? f.bar() : f;
}

BeadedDiagram BeadedDiagram::reoriented(int edge) const {
  std::vector<Edge> edges = diagram_.edges();
  std::swap(edges[edge].tail, edges[edge].head);
  // Half 2e now sits at the old head: swap the two halves in cyclic orders.
  auto swap_half = [edge](int h) { return Diagram::edge_of(h) == edge ? Diagram::partner(h) : h; };
  std::vector<CyclicOrder> cyclic = diagram_.cyclic_orders();
  for (auto& c : cyclic)
    for (int& h : c) h = swap_half(h);
  std::vector<LaurentPoly> beads = beads_;
  beads[edge] = beads[edge].bar();
  return BeadedDiagram(Diagram(diagram_.trivalent_count(), diagram_.legs(), std::move(edges), std::move(cyclic)),
                       std::move(beads));
}

SpanningForest spanning_forest(const Diagram& d) {
  const int n = d.vertex_count();
  SpanningForest f;
  f.tree.assign(d.edge_count(), false);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int h : d.incident(v)) {
        int w = d.vertex_of(Diagram::partner(h));
        if (seen[w]) continue;
        seen[w] = true;
        f.tree[Diagram::edge_of(h)] = true;
        f.steps.emplace_back(Diagram::edge_of(h), w);
        queue.push_back(w);
      }
    }
  }
  for (int e = 0; e < d.edge_count(); ++e)
    if (!f.tree[e]) f.cotree.push_back(e);
  return f;
}

namespace {

std::vector<long long> potential(const Diagram& d, const SpanningForest& f, const Cocycle& x) {
  std::vector<long long> c(d.vertex_count(), 0);
  for (auto [e, child] : f.steps) {
    const Edge& edge = d.edges()[e];
    // Choose c so that x(e) - (c(head) - c(tail)) = 0.
    if (edge.head == child) {
      c[child] = c[edge.tail] + x[e];
    } else {
      c[child] = c[edge.head] - x[e];
    }
  }
  return c;
}

}  // namespace

std::vector<long long> cotree_coordinates(const Diagram& d, const SpanningForest& f, const Cocycle& x) {
  auto c = potential(d, f, x);
  std::vector<long long> out;
  out.reserve(f.cotree.size());
  for (int e : f.cotree) {
    const Edge& edge = d.edges()[e];
    out.push_back(x[e] - c[edge.head] + c[edge.tail]);
  }
  return out;
}

Cocycle class_cocycle(const Diagram& d, const SpanningForest& f, const std::vector<long long>& cls) {
  if (cls.size() != f.cotree.size()) throw Error(ErrorKind::Malformed, "class length does not match the loop degree");
  Cocycle x(d.edge_count(), 0);
  for (std::size_t i = 0; i < cls.size(); ++i) x[f.cotree[i]] = cls[i];
  return x;
}

Cocycle push_move(const Diagram& d, Cocycle x, int vertex, long long amount) {
  for (int e = 0; e < d.edge_count(); ++e) {
    if (d.edges()[e].head == vertex) x[e] += amount;
    if (d.edges()[e].tail == vertex) x[e] -= amount;
  }
  return x;
}

BeadNormalizer::BeadNormalizer(const Diagram& d)
    : d_(&d), labeling_(full_labeling(d)), rep_(beadcalc::representative(labeling_.encoding)),
      forest_(spanning_forest(rep_)) {
  if (d.leg_count() != 0) throw Error(ErrorKind::Malformed, "beaded diagrams must be closed");
}

BeadedForm BeadNormalizer::normalize(const Cocycle& x) const {
  if (static_cast<int>(x.size()) != d_->edge_count())
    throw Error(ErrorKind::Malformed, "one bead exponent per edge expected");
  BeadedForm best;
  best.key.diagram = labeling_.encoding;
  bool have = false;
  Cocycle y(rep_.edge_count());
  for (const Isomorphism& iso : labeling_.isomorphisms) {
    for (int e = 0; e < d_->edge_count(); ++e) {
      int h = iso.half_map[2 * e];
      y[Diagram::edge_of(h)] = (h & 1) ? -x[e] : x[e];
    }
    auto coords = cotree_coordinates(rep_, forest_, y);
    if (!have || coords < best.key.cls) {
      best.key.cls = std::move(coords);
      best.sign = iso.sign;
      have = true;
    } else if (coords == best.key.cls && iso.sign != best.sign) {
      best.sign = 0;
    }
  }
  // A vanishing verdict must survive later isomorphisms reaching the minimum.
  if (best.sign != 0) {
    for (const Isomorphism& iso : labeling_.isomorphisms) {
      for (int e = 0; e < d_->edge_count(); ++e) {
        int h = iso.half_map[2 * e];
        y[Diagram::edge_of(h)] = (h & 1) ? -x[e] : x[e];
      }
      if (cotree_coordinates(rep_, forest_, y) == best.key.cls && iso.sign != best.sign) {
        best.sign = 0;
        break;
      }
    }
  }
  return best;
}

BeadedForm push_normal_form(const Diagram& d, const Cocycle& x) { return BeadNormalizer(d).normalize(x); }

BeadedComb expand_multilinear(const BeadedDiagram& bd) {
  const Diagram& d = bd.diagram();
  BeadNormalizer normalizer(d);
  BeadedComb out;
  const int m = d.edge_count();
  for (const auto& f : bd.beads())
    if (f.is_zero()) return out;
  std::vector<LaurentPoly::Terms::const_iterator> pos(m);
  for (int e = 0; e < m; ++e) pos[e] = bd.beads()[e].terms().begin();
  Cocycle x(m);
  for (;;) {
    Rational coeff = 1;
    for (int e = 0; e < m; ++e) {
      x[e] = pos[e]->first;
      coeff *= pos[e]->second;
    }
    BeadedForm form = normalizer.normalize(x);
    if (!form.zero()) out.add(form.key, coeff * form.sign);
    int e = 0;
    while (e < m) {
      if (++pos[e] != bd.beads()[e].terms().end()) break;
      pos[e] = bd.beads()[e].terms().begin();
      ++e;
    }
    if (e == m) break;
  }
  return out;
}

Cocycle key_cocycle(const BeadedKey& key, Diagram* rep_out) {
  Diagram rep = representative(key.diagram);
  Cocycle x = class_cocycle(rep, spanning_forest(rep), key.cls);
  if (rep_out) *rep_out = std::move(rep);
  return x;
}

long long bead_degree(const std::vector<long long>& cls) {
  long long g = 0;
  for (long long c : cls) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

std::map<long long, BeadedComb> split_by_bead_degree(const BeadedComb& v) {
  std::map<long long, BeadedComb> out;
  for (const auto& [key, c] : v) out[bead_degree(key.cls)].add(key, c);
  return out;
}

Vector psi(const BeadedComb& v) {
  Vector out;
  for (const auto& [key, c] : v) {
    if (bead_degree(key.cls) != 0)
      throw Error(ErrorKind::NonzeroBeadDegree, "psi is defined on bead degree 0 only");
    out.add(key.diagram, c);
  }
  return out;
}

BeadedComb embed_classical(const Vector& v) {
  BeadedComb out;
  for (const auto& [enc, c] : v) {
    Diagram rep = representative(enc);
    if (rep.leg_count() != 0) throw Error(ErrorKind::Malformed, "only closed diagrams carry beads");
    out.add(BeadedKey{enc, std::vector<long long>(rep.loop_degree(), 0)}, c);
  }
  return out;
}

BeadedComb phi(long long p, const BeadedComb& v) {
  if (p < 1) throw Error(ErrorKind::WrongDegree, "phi needs p >= 1");
  BeadedComb out;
  for (const auto& [key, c] : v) {
    if (bead_degree(key.cls) != 1) throw Error(ErrorKind::WrongDegree, "phi expects bead degree 1 input");
    BeadedKey k = key;
    for (auto& x : k.cls) x *= p;
    out.add(k, c);
  }
  return out;
}

BeadedComb unphi(long long p, const BeadedComb& v) {
  if (p < 1) throw Error(ErrorKind::WrongDegree, "unphi needs p >= 1");
  BeadedComb out;
  for (const auto& [key, c] : v) {
    BeadedKey k = key;
    for (auto& x : k.cls) {
      if (x % p != 0) throw Error(ErrorKind::NotDivisible, "class coordinates are not divisible by p");
      x /= p;
    }
    if (bead_degree(k.cls) != 1) throw Error(ErrorKind::WrongDegree, "unphi expects bead degree p input");
    out.add(k, c);
  }
  return out;
}

namespace {

BeadedComb ihx_with_cocycle(const Diagram& d, const Cocycle& y, int edge) {
  // ihx_terms keeps every edge id and its orientation.
  auto terms = ihx_terms(d, edge);
  BeadedComb out;
  const int signs[3] = {1, -1, 1};
  for (int i = 0; i < 3; ++i) {
    BeadedForm f = push_normal_form(terms[i], y);
    if (!f.zero()) out.add(f.key, Rational(signs[i] * f.sign));
  }
  return out;
}

}  // namespace

BeadedComb beaded_ihx(const Diagram& d, const Cocycle& x, int edge) {
  const int head = d.edges()[edge].head;
  Cocycle y = push_move(d, x, head, -x[edge]);
  return ihx_with_cocycle(d, y, edge);
}

BeadedComb beaded_ihx_collapsed(const Diagram& d, int edge, const Cocycle& collapsed) {
  if (static_cast<int>(collapsed.size()) != d.edge_count() - 1)
    throw Error(ErrorKind::Malformed, "collapsed cocycle must skip exactly the IHX edge");
  Cocycle y(d.edge_count(), 0);
  for (int e = 0, i = 0; e < d.edge_count(); ++e)
    if (e != edge) y[e] = collapsed[i++];
  return ihx_with_cocycle(d, y, edge);
}

}  // namespace beadcalc
