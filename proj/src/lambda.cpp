#include "beadcalc/lambda.hpp"

#include <algorithm>
#include <array>

#include "beadcalc/error.hpp"
#include "beadcalc/surgery.hpp"

namespace beadcalc {

namespace {

const std::array<std::string, 3> kLegs = {"1", "2", "3"};

Diagram relabeled(const Diagram& d, const std::map<std::string, std::string>& perm) {
  std::vector<std::string> legs = d.legs();
  for (auto& l : legs)
    if (auto it = perm.find(l); it != perm.end()) l = it->second;
  return Diagram(d.trivalent_count(), std::move(legs), d.edges(), d.cyclic_orders());
}

void require_f3(const Vector& v) {
  for (const auto& [enc, c] : v) {
    EncodingHeader h = read_header(enc);
    if (h.trivalent == 0 || h.labels != std::vector<std::string>(kLegs.begin(), kLegs.end()) ||
        !representative(enc).connected())
      throw Error(ErrorKind::NotInF3, "element is not in F_3 (connected, legs 1,2,3, a trivalent vertex)");
  }
}

}  // namespace

Vector relabel_legs(const Vector& v, const std::map<std::string, std::string>& perm) {
  Vector out;
  for (const auto& [enc, c] : v) out += to_vector(relabeled(representative(enc), perm), c);
  return out;
}

LambdaElement antisymmetrize(const Vector& v) {
  require_f3(v);
  std::array<int, 3> p = {0, 1, 2};
  Vector out;
  do {
    int inversions = (p[0] > p[1]) + (p[0] > p[2]) + (p[1] > p[2]);
    std::map<std::string, std::string> perm;
    for (int i = 0; i < 3; ++i) perm[kLegs[i]] = kLegs[p[i]];
    out += Rational(inversions % 2 ? -1 : 1, 6) * relabel_legs(v, perm);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_antisymmetric(const Vector& v, RelationEngine& engine) {
  const std::array<std::pair<int, int>, 3> swaps = {{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [i, j] : swaps) {
    std::map<std::string, std::string> perm{{kLegs[i], kLegs[j]}, {kLegs[j], kLegs[i]}};
    if (!engine.reduce(relabel_legs(v, perm) + v, kLambdaMaxDegree + 1).empty()) return false;
  }
  return true;
}

namespace {

Diagram glue(const Diagram& lambda, const Diagram& d, int vertex) {
  const int base_half = d.half_edge_count();
  const int base_vertex = d.vertex_count();
  HalfGraph g(d);
  for (int v = 0; v < lambda.vertex_count(); ++v) {
    if (lambda.is_leg(v)) g.add_leg(lambda.leg_label(v));
    else g.add_trivalent();
  }
  for (int h = 0; h < lambda.half_edge_count(); ++h) g.add_half(base_vertex + lambda.vertex_of(h));
  for (int h = 0; h < lambda.half_edge_count(); h += 2) g.pair(base_half + h, base_half + h + 1);
  for (int v = 0; v < lambda.vertex_count(); ++v) {
    if (lambda.is_leg(v)) {
      g.cyclic(base_vertex + v) = {base_half + lambda.incident(v).front(), -1, -1};
    } else {
      const CyclicOrder& c = lambda.cyclic(v);
      g.cyclic(base_vertex + v) = {base_half + c[0], base_half + c[1], base_half + c[2]};
    }
  }

  // Half-edge of lambda facing leg i, and the leg itself.
  std::array<int, 3> inner{}, leg_vertex{};
  for (int v = lambda.trivalent_count(); v < lambda.vertex_count(); ++v) {
    auto it = std::find(kLegs.begin(), kLegs.end(), lambda.leg_label(v));
    int i = static_cast<int>(it - kLegs.begin());
    leg_vertex[i] = v;
    inner[i] = base_half + Diagram::partner(lambda.incident(v).front());
  }

  const CyclicOrder& c0 = d.cyclic(vertex);
  const CyclicOrder c = rotate_to(c0, *std::min_element(c0.begin(), c0.end()));
  for (int i = 0; i < 3; ++i) {
    const int outer = Diagram::partner(c[i]);
    if (d.vertex_of(outer) == vertex) {
      // Self-loop at the vertex: join the two corresponding inner halves.
      int j = static_cast<int>(std::find(c.begin(), c.end(), outer) - c.begin());
      if (i < j) g.pair(inner[i], inner[j]);
    } else {
      g.pair(inner[i], outer);
    }
    g.remove_half(c[i]);
    g.remove_vertex(base_vertex + leg_vertex[i]);
    g.remove_half(base_half + lambda.incident(leg_vertex[i]).front());
  }
  g.remove_vertex(vertex);
  return g.to_diagram();
}

}  // namespace

Vector insert(const LambdaElement& lambda, const Diagram& d, int vertex) {
  if (vertex < 0 || vertex >= d.vertex_count() || d.is_leg(vertex))
    throw Error(ErrorKind::NotTrivalent, "insertion needs a trivalent vertex, got " + std::to_string(vertex));
  require_f3(lambda);
  Vector out;
  for (const auto& [enc, c] : lambda) out += to_vector(glue(representative(enc), d, vertex), c);
  return out;
}

Vector insert(const LambdaElement& lambda, const Vector& v, int vertex) {
  Vector out;
  for (const auto& [enc, c] : v) out += c * insert(lambda, representative(enc), vertex);
  return out;
}

LambdaElement lambda_mult(const LambdaElement& a, const LambdaElement& b) {
  require_f3(b);
  return insert(a, b, 0);
}

Diagram tripod() {
  DiagramBuilder b;
  int y = b.add_trivalent();
  int e[3];
  for (int i = 0; i < 3; ++i) e[i] = b.add_edge(y, b.add_leg(kLegs[i]));
  b.set_cyclic(y, {2 * e[0], 2 * e[1], 2 * e[2]});
  return b.build();
}

LambdaElement lambda_unit() { return to_vector(tripod()); }

Diagram t_picture_triangle() {
  DiagramBuilder b;
  int a = b.add_trivalent(), v = b.add_trivalent(), c = b.add_trivalent();
  int l1 = b.add_edge(a, b.add_leg("1"));
  int l2 = b.add_edge(v, b.add_leg("2"));
  int l3 = b.add_edge(c, b.add_leg("3"));
  int ab = b.add_edge(a, v), bc = b.add_edge(v, c), ca = b.add_edge(c, a);
  b.set_cyclic(a, {2 * l1, 2 * ab, 2 * ca + 1});
  b.set_cyclic(v, {2 * bc, 2 * ab + 1, 2 * l2});
  b.set_cyclic(c, {2 * ca, 2 * bc + 1, 2 * l3});
  return b.build();
}

Diagram t_picture_bubble() {
  DiagramBuilder b;
  int y = b.add_trivalent(), p = b.add_trivalent(), q = b.add_trivalent();
  int l1 = b.add_edge(y, b.add_leg("1"));
  int l2 = b.add_edge(y, b.add_leg("2"));
  int yp = b.add_edge(y, p);
  int upper = b.add_edge(p, q), lower = b.add_edge(p, q);
  int l3 = b.add_edge(q, b.add_leg("3"));
  b.set_cyclic(y, {2 * l1, 2 * l2, 2 * yp});
  b.set_cyclic(p, {2 * upper, 2 * yp + 1, 2 * lower});
  b.set_cyclic(q, {2 * upper + 1, 2 * lower + 1, 2 * l3});
  return b.build();
}

LambdaElement builtin_t() { return to_vector(t_picture_triangle()); }

Diagram ladder(int n) {
  if (n < 1) throw Error(ErrorKind::Malformed, "a ladder needs at least one rung");
  DiagramBuilder b;
  int j = b.add_trivalent();
  std::vector<int> left(n), right(n);
  for (int i = 0; i < n; ++i) {
    left[i] = b.add_trivalent();
    right[i] = b.add_trivalent();
  }
  // down[i] / up[i]: rail edges below and above rung i, oriented upwards.
  std::vector<int> ldown(n), rdown(n), rung(n);
  for (int i = 0; i < n; ++i) {
    ldown[i] = b.add_edge(i == 0 ? j : left[i - 1], left[i]);
    rdown[i] = b.add_edge(i == 0 ? j : right[i - 1], right[i]);
    rung[i] = b.add_edge(left[i], right[i]);
  }
  int ltop = b.add_edge(left[n - 1], b.add_leg("2"));
  int rtop = b.add_edge(right[n - 1], b.add_leg("1"));
  int l3 = b.add_edge(j, b.add_leg("3"));
  b.set_cyclic(j, {2 * rdown[0], 2 * ldown[0], 2 * l3});
  for (int i = 0; i < n; ++i) {
    int lup = i + 1 < n ? 2 * ldown[i + 1] : 2 * ltop;
    int rup = i + 1 < n ? 2 * rdown[i + 1] : 2 * rtop;
    b.set_cyclic(left[i], {2 * rung[i], lup, 2 * ldown[i] + 1});
    b.set_cyclic(right[i], {rup, 2 * rung[i] + 1, 2 * rdown[i] + 1});
  }
  return b.build();
}

LambdaElement builtin_x(int n, int cap) {
  if (n < 1) throw Error(ErrorKind::Malformed, "x_n needs n >= 1");
  const int degree = n + 2;
  if (degree > cap)
    throw Error(ErrorKind::CapExceeded,
                "x_" + std::to_string(n) + " has degree " + std::to_string(degree) + ", above the cap " +
                    std::to_string(cap));
  return antisymmetrize(to_vector(ladder(n)));
}

int lambda_degree(const Vector& v) { return v.empty() ? 0 : read_header(v.begin()->first).degree(); }

bool verify_scalar_relation(const Vector& lhs, const Vector& rhs, int degree, const std::vector<std::string>& legs,
                            RelationEngine& engine) {
  // Check both sides, not just the difference, which may have cancelled.
  engine.is_zero(lhs, degree, legs);
  engine.is_zero(rhs, degree, legs);
  return engine.is_zero(lhs - rhs, degree, legs);
}

}  // namespace beadcalc
