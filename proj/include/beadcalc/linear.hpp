#pragma once

// Sparse reduced row-echelon spans of relation vectors over Q.
//
// Pivots are the greatest encoding of each row (byte-lexicographic order) and
// carry coefficient 1; after finalize() no row mentions another row's pivot,
// so the echelon form depends only on the span.

#include <map>
#include <vector>

#include "beadcalc/canonical.hpp"
#include "beadcalc/lincomb.hpp"

namespace beadcalc {

using Vector = LinComb<Encoding>;

class RelationSpan {
 public:
  RelationSpan() = default;

  static RelationSpan echelonize(const std::vector<Vector>& relations);

  // Adds a relation without restoring full reduction; call finalize() after
  // the last insertion.
  void insert(const Vector& relation);
  void finalize();

  // Canonical coset representative: no term of the result is a pivot.
  Vector reduce(const Vector& v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_pivot(const Encoding& e) const { return rows_.count(e) != 0; }
  const std::map<Encoding, Vector>& rows() const noexcept { return rows_; }

  friend bool operator==(const RelationSpan& a, const RelationSpan& b) { return a.rows_ == b.rows_; }

 private:
  std::map<Encoding, Vector> rows_;
};

}  // namespace beadcalc
