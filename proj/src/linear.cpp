#include "beadcalc/linear.hpp"

namespace beadcalc {

RelationSpan RelationSpan::echelonize(const std::vector<Vector>& relations) {
  RelationSpan span;
  for (const auto& r : relations) span.insert(r);
  span.finalize();
  return span;
}

Vector RelationSpan::reduce(const Vector& v) const {
  Vector r = v;
  if (rows_.empty()) return r;
  const Encoding* bound = nullptr;
  Encoding last;
  for (;;) {
    const auto& terms = r.terms();
    auto it = bound ? terms.lower_bound(*bound) : terms.end();
    const Encoding* pivot = nullptr;
    Rational coeff;
    while (it != terms.begin()) {
      --it;
      if (rows_.count(it->first)) {
        pivot = &it->first;
        coeff = it->second;
        break;
      }
    }
    if (!pivot) break;
    last = *pivot;
    r.add_scaled(rows_.at(last), -coeff);
    bound = &last;
  }
  return r;
}

void RelationSpan::insert(const Vector& relation) {
  Vector r = reduce(relation);
  if (r.empty()) return;
  Rational lead = r.coefficient(r.leading());
  r *= Rational(1) / lead;
  Encoding key = r.leading();
  rows_.emplace(std::move(key), std::move(r));
}

void RelationSpan::finalize() {
  for (auto it = rows_.begin(); it != rows_.end(); ++it) {
    Vector tail = it->second;
    tail.erase(it->first);
    // Rows below `it` are already fully reduced; reduce() only touches those.
    Vector reduced = reduce(tail);
    reduced.add(it->first, 1);
    it->second = std::move(reduced);
  }
}

}  // namespace beadcalc
