#include "beadcalc/enumerate.hpp"

#include <algorithm>
#include <set>

#include "beadcalc/error.hpp"
#include "beadcalc/surgery.hpp"

namespace beadcalc {
namespace {

bool valid_counts(int t, int u) {
  if (t < 0 || u < 0 || (t == 0 && u == 0)) return false;
  if ((3 * t + u) % 2) return false;
  if (t == 0) return u == 2;
  return true;
}

Diagram strut() { return Diagram(0, {std::string(kHairLabel), std::string(kHairLabel)}, {{0, 1}}, {}); }

Diagram lollipop() { return Diagram(1, {std::string(kHairLabel)}, {{0, 0}, {0, 1}}, {CyclicOrder{0, 1, 2}}); }

// Joins the two legs of a two-legged diagram into one edge; false for a strut.
bool join_legs(const Diagram& d, Diagram& out) {
  HalfGraph g(d);
  const int l1 = d.trivalent_count(), l2 = l1 + 1;
  const int h1 = g.leg_half(l1), h2 = g.leg_half(l2);
  const int m1 = g.mate(h1), m2 = g.mate(h2);
  if (m1 == h2) return false;
  g.remove_half(h1);
  g.remove_half(h2);
  g.remove_vertex(l1);
  g.remove_vertex(l2);
  g.pair(m1, m2);
  out = g.to_diagram();
  return true;
}

Diagram with_labels(const Diagram& d, std::vector<std::string> labels) {
  return Diagram(d.trivalent_count(), std::move(labels), d.edges(), d.cyclic_orders());
}

void add_labelings(const Diagram& d, const std::vector<std::string>& sorted_labels, std::set<Encoding>& out) {
  std::vector<std::string> labels = sorted_labels;
  do out.insert(canonicalize(with_labels(d, labels)).encoding);
  while (std::next_permutation(labels.begin(), labels.end()));
}

}  // namespace

int trivalent_for(int degree, int legs) {
  int t = 2 * degree - legs;
  if (degree < 0 || legs < 0 || t < 0 || (3 * t + legs) % 2) return -1;
  return t;
}

const std::vector<Encoding>& DiagramCatalog::unlabeled(int trivalent, int legs) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(trivalent, legs);
  auto it = unlabeled_.find(key);
  if (it != unlabeled_.end()) return it->second;
  auto built = build_unlabeled(trivalent, legs);
  return unlabeled_.emplace(key, std::move(built)).first->second;
}

std::vector<Encoding> DiagramCatalog::build_unlabeled(int t, int u) {
  std::set<Encoding> found;
  if (!valid_counts(t, u)) return {};
  if (t == 0) {
    found.insert(canonicalize(strut()).encoding);
  } else if (u == 0) {
    for (const Encoding& enc : unlabeled(t, 2)) {
      Diagram joined;
      if (join_legs(representative(enc), joined)) found.insert(canonicalize(joined).encoding);
    }
  } else {
    if (t == 1 && u == 1) found.insert(canonicalize(lollipop()).encoding);
    if (valid_counts(t - 1, u - 1)) {
      for (const Encoding& enc : unlabeled(t - 1, u - 1)) {
        Diagram rep = representative(enc);
        for (int e = 0; e < rep.edge_count(); ++e)
          found.insert(canonicalize(attach_leg(rep, e, std::string(kHairLabel))).encoding);
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Encoding> DiagramCatalog::classes(int trivalent, std::vector<std::string> legs, bool connected) {
  std::sort(legs.begin(), legs.end());
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(trivalent, legs, connected);
  auto it = labeled_.find(key);
  if (it != labeled_.end()) return it->second;

  const int u = static_cast<int>(legs.size());
  const bool all_hair = std::all_of(legs.begin(), legs.end(), [](const std::string& l) { return l == kHairLabel; });
  std::set<Encoding> found;

  if (connected) {
    if (all_hair) {
      const auto& base = unlabeled(trivalent, u);
      found.insert(base.begin(), base.end());
    } else {
      for (const Encoding& enc : unlabeled(trivalent, u)) add_labelings(representative(enc), legs, found);
    }
  } else {
    struct Piece {
      int t, u;
      Diagram rep;
    };
    std::vector<Piece> pieces;
    for (int ti = 0; ti <= trivalent; ++ti)
      for (int ui = 0; ui <= u; ++ui)
        for (const Encoding& enc : unlabeled(ti, ui)) pieces.push_back(Piece{ti, ui, representative(enc)});

    std::vector<int> chosen;
    auto recurse = [&](auto&& self, std::size_t start, int t_left, int u_left) -> void {
      if (t_left == 0 && u_left == 0) {
        if (chosen.empty()) return;
        std::vector<Diagram> parts;
        for (int i : chosen) parts.push_back(pieces[i].rep);
        Diagram whole = disjoint_union(parts);
        if (all_hair) {
          found.insert(canonicalize(whole).encoding);
        } else {
          add_labelings(whole, legs, found);
        }
        return;
      }
      for (std::size_t i = start; i < pieces.size(); ++i) {
        if (pieces[i].t > t_left || pieces[i].u > u_left) continue;
        chosen.push_back(static_cast<int>(i));
        self(self, i, t_left - pieces[i].t, u_left - pieces[i].u);
        chosen.pop_back();
      }
    };
    recurse(recurse, 0, trivalent, u);
  }

  std::vector<Encoding> out(found.begin(), found.end());
  return labeled_.emplace(key, std::move(out)).first->second;
}

std::vector<CanonicalForm> enumerate(DiagramCatalog& catalog, int degree, const std::vector<std::string>& legs,
                                     bool connected, int cap) {
  if (degree > cap)
    throw Error(ErrorKind::CapExceeded,
                "degree " + std::to_string(degree) + " exceeds the enumeration cap " + std::to_string(cap));
  const int t = trivalent_for(degree, static_cast<int>(legs.size()));
  std::vector<CanonicalForm> out;
  if (t < 0) return out;
  for (const Encoding& enc : catalog.classes(t, legs, connected)) {
    CanonicalForm f = canonicalize(representative(enc));
    if (!f.zero()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace beadcalc
