#pragma once

// IHX relations and the quotient spaces A(X) / B(*) graded by degree.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "beadcalc/enumerate.hpp"
#include "beadcalc/linear.hpp"

namespace beadcalc {

// A homogeneous piece: fixed trivalent count and leg labels, optionally
// restricted to connected diagrams. IHX preserves all three.
struct Sector {
  int trivalent = 0;
  std::vector<std::string> legs;  // sorted
  bool connected = false;
  auto operator<=>(const Sector&) const = default;
};

struct QuotientBasis {
  int degree = 0;
  std::vector<std::string> legs;
  bool connected = false;
  std::vector<Encoding> classes;  // nonvanishing classes
  std::vector<Encoding> basis;    // non-pivot classes, ascending
  RelationSpan span;

  std::size_t dimension() const noexcept { return basis.size(); }
  Vector project(const Vector& v) const { return span.reduce(v); }
};

// Canonicalizes each diagram and collects sign * coeff.
Vector to_vector(const Diagram& d, const Rational& coeff = 1);

// I - H + X at `edge`, or empty when the terms cancel under AS.
Vector ihx_relation(const Diagram& d, int edge);

class RelationEngine {
 public:
  explicit RelationEngine(int max_degree = kDefaultMaxDegree) : max_degree_(max_degree) {}

  int max_degree() const noexcept { return max_degree_; }
  void set_max_degree(int cap) { max_degree_ = cap; }
  DiagramCatalog& catalog() noexcept { return catalog_; }

  std::vector<Vector> ihx_generators(int degree, const std::vector<std::string>& legs, bool connected);

  // With `f_piece`, restricts to connected diagrams with at least one
  // trivalent vertex (the graded piece of F_n).
  std::shared_ptr<const QuotientBasis> quotient_basis(int degree, const std::vector<std::string>& legs,
                                                      bool connected, bool f_piece = false);

  // Reduces each homogeneous piece of v in its own sector. `cap` overrides
  // the engine's degree cap when positive.
  Vector reduce(const Vector& v, int cap = 0);

  // Throws DegreeMismatch unless every term has this degree and leg set.
  bool is_zero(const Vector& v, int degree, const std::vector<std::string>& legs);

  // Uncapped sector access.
  std::shared_ptr<const QuotientBasis> sector(const Sector& s);

 private:
  std::vector<Vector> generators_for(const Sector& s);
  void check_cap(int degree, int cap) const;

  int max_degree_;
  DiagramCatalog catalog_;
  std::recursive_mutex mutex_;
  std::map<Sector, std::shared_ptr<const QuotientBasis>> cache_;
};

}  // namespace beadcalc
