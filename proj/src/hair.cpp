#include "beadcalc/hair.hpp"

#include "beadcalc/error.hpp"
#include "beadcalc/surgery.hpp"

namespace beadcalc {

Diagram plant_hairs(const Diagram& d, const std::vector<int>& k) {
  HalfGraph g(d);
  for (int e = 0; e < d.edge_count(); ++e) {
    int prev = 2 * e;  // tail-side half, still at the tail vertex
    for (int i = 0; i < k[e]; ++i) {
      int m = g.add_trivalent();
      int leg = g.add_leg(std::string(kHairLabel));
      int in = g.add_half(m);
      int out = g.add_half(m);
      g.pair(prev, in);
      auto [m_leg, leg_half] = g.connect(m, leg);
      g.cyclic(m) = {in, m_leg, out};
      g.cyclic(leg) = {leg_half, -1, -1};
      prev = out;
    }
    if (k[e] > 0) g.pair(prev, 2 * e + 1);
  }
  return g.to_diagram();
}

namespace {

void check_truncation(int base, int D) {
  if (D < base)
    throw Error(ErrorKind::TruncationTooSmall,
                "truncation " + std::to_string(D) + " is below the diagram degree " + std::to_string(base));
}

}  // namespace

Graded hair_expand_presentation(const Diagram& d, const Cocycle& x, int D) {
  const int base = d.degree();
  check_truncation(base, D);
  if (static_cast<int>(x.size()) != d.edge_count())
    throw Error(ErrorKind::Malformed, "one bead exponent per edge expected");
  const int m = d.edge_count();
  const int budget = D - base;
  Graded out;
  std::vector<int> k(m, 0);
  // Depth-first over leg counts per edge with total at most `budget`.
  auto visit = [&](auto&& self, int e, int used, const Rational& coeff) -> void {
    if (e == m) {
      Vector v = to_vector(plant_hairs(d, k), coeff);
      if (!v.empty()) out[base + used] += v;
      return;
    }
    k[e] = 0;
    self(self, e + 1, used, coeff);
    if (x[e] == 0) return;
    Rational c = coeff;
    for (int j = 1; used + j <= budget; ++j) {
      c *= Rational(x[e]) / j;
      k[e] = j;
      self(self, e + 1, used + j, c);
    }
    k[e] = 0;
  };
  visit(visit, 0, 0, Rational(1));
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

Graded hair_expand(const BeadedKey& key, int D) {
  Diagram rep = representative(key.diagram);
  Cocycle x = key_cocycle(key);
  return hair_expand_presentation(rep, x, D);
}

Graded reduce_graded(const Graded& g, int D, RelationEngine& engine, int cap) {
  if (D > cap)
    throw Error(ErrorKind::CapExceeded,
                "truncation " + std::to_string(D) + " exceeds the cap " + std::to_string(cap));
  Graded out;
  for (const auto& [degree, v] : g) {
    if (degree > D) continue;
    Vector r = engine.reduce(v, cap);
    if (!r.empty()) out.emplace(degree, std::move(r));
  }
  return out;
}

Graded hair(const BeadedComb& v, int D, RelationEngine& engine, int cap) {
  if (D > cap)
    throw Error(ErrorKind::CapExceeded,
                "truncation " + std::to_string(D) + " exceeds the cap " + std::to_string(cap));
  Graded raw;
  for (const auto& [key, c] : v)
    for (auto& [degree, piece] : hair_expand(key, D)) raw[degree] += c * piece;
  return reduce_graded(raw, D, engine, cap);
}

std::map<int, bool> kernel_check(const BeadedComb& v, int D, RelationEngine& engine, int cap) {
  Graded h = hair(v, D, engine, cap);
  std::map<int, bool> out;
  for (int degree = 1; degree <= D; ++degree) out[degree] = !h.count(degree);
  return out;
}

}  // namespace beadcalc
