#include "beadcalc/relations.hpp"

#include <algorithm>
#include <set>

#include "beadcalc/error.hpp"
#include "beadcalc/surgery.hpp"

namespace beadcalc {

Vector to_vector(const Diagram& d, const Rational& coeff) {
  CanonicalForm f = canonicalize(d);
  Vector v;
  if (!f.zero()) v.add(f.encoding, coeff * f.sign);
  return v;
}

Vector ihx_relation(const Diagram& d, int edge) {
  auto terms = ihx_terms(d, edge);
  Vector v = to_vector(terms[0]);
  v -= to_vector(terms[1]);
  v += to_vector(terms[2]);
  return v;
}

void RelationEngine::check_cap(int degree, int cap) const {
  const int limit = cap > 0 ? cap : max_degree_;
  if (degree > limit)
    throw Error(ErrorKind::CapExceeded,
                "degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(limit));
}

std::vector<Vector> RelationEngine::generators_for(const Sector& s) {
  std::vector<Vector> out;
  std::set<std::vector<std::pair<Encoding, Rational>>> seen;
  for (const Encoding& enc : catalog_.classes(s.trivalent, s.legs, s.connected)) {
    Diagram rep = representative(enc);
    for (int e = 0; e < rep.edge_count(); ++e) {
      const Edge& edge = rep.edges()[e];
      if (edge.tail == edge.head || rep.is_leg(edge.tail) || rep.is_leg(edge.head)) continue;
      Vector r = ihx_relation(rep, e);
      if (r.empty()) continue;
      r *= Rational(1) / r.coefficient(r.leading());
      std::vector<std::pair<Encoding, Rational>> key(r.begin(), r.end());
      if (seen.insert(std::move(key)).second) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Vector> RelationEngine::ihx_generators(int degree, const std::vector<std::string>& legs, bool connected) {
  check_cap(degree, 0);
  const int t = trivalent_for(degree, static_cast<int>(legs.size()));
  if (t < 0) return {};
  auto sorted = legs;
  std::sort(sorted.begin(), sorted.end());
  return generators_for(Sector{t, sorted, connected});
}

std::shared_ptr<const QuotientBasis> RelationEngine::sector(const Sector& s) {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;

  auto q = std::make_shared<QuotientBasis>();
  q->degree = (s.trivalent + static_cast<int>(s.legs.size())) / 2;
  q->legs = s.legs;
  q->connected = s.connected;
  for (const Encoding& enc : catalog_.classes(s.trivalent, s.legs, s.connected))
    if (!canonicalize(representative(enc)).zero()) q->classes.push_back(enc);
  q->span = RelationSpan::echelonize(generators_for(s));
  for (const Encoding& enc : q->classes)
    if (!q->span.is_pivot(enc)) q->basis.push_back(enc);
  cache_.emplace(s, q);
  return q;
}

std::shared_ptr<const QuotientBasis> RelationEngine::quotient_basis(int degree, const std::vector<std::string>& legs,
                                                                    bool connected, bool f_piece) {
  check_cap(degree, 0);
  auto sorted = legs;
  std::sort(sorted.begin(), sorted.end());
  const int t = trivalent_for(degree, static_cast<int>(legs.size()));
  if (t < 0 || (f_piece && t == 0)) {
    auto empty = std::make_shared<QuotientBasis>();
    empty->degree = degree;
    empty->legs = sorted;
    empty->connected = connected || f_piece;
    return empty;
  }
  return sector(Sector{t, sorted, connected || f_piece});
}

Vector RelationEngine::reduce(const Vector& v, int cap) {
  // Group terms by (trivalent count, legs); a group uses the connected
  // sector when all of its terms are connected.
  std::map<std::pair<int, std::vector<std::string>>, std::pair<Vector, bool>> groups;
  for (const auto& [enc, c] : v) {
    EncodingHeader h = read_header(enc);
    check_cap(h.degree(), cap);
    auto& slot = groups[{h.trivalent, h.labels}];
    if (slot.first.empty()) slot.second = true;
    slot.first.add(enc, c);
    if (!representative(enc).connected()) slot.second = false;
  }
  Vector out;
  for (auto& [key, group] : groups) {
    auto q = sector(Sector{key.first, key.second, group.second});
    out += q->project(group.first);
  }
  return out;
}

bool RelationEngine::is_zero(const Vector& v, int degree, const std::vector<std::string>& legs) {
  auto sorted = legs;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [enc, c] : v) {
    EncodingHeader h = read_header(enc);
    if (h.degree() != degree || h.labels != sorted)
      throw Error(ErrorKind::DegreeMismatch, "term of degree " + std::to_string(h.degree()) +
                                                 " does not match the requested degree/legs");
  }
  return reduce(v).empty();
}

}  // namespace beadcalc
