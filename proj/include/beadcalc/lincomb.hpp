#pragma once

// Finite formal Q-linear combinations keyed by an ordered key type.

#include <map>
#include <utility>

#include "beadcalc/rational.hpp"

namespace beadcalc {

template <class Key>
class LinComb {
 public:
  using Terms = std::map<Key, Rational>;
  using const_iterator = typename Terms::const_iterator;

  LinComb() = default;
  LinComb(const Key& key, const Rational& coeff) { add(key, coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // this += c * other
  void add_scaled(const LinComb& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms_) add(k, c * v);
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinComb& operator+=(const LinComb& o) { add_scaled(o, 1); return *this; }
  LinComb& operator-=(const LinComb& o) { add_scaled(o, -1); return *this; }
  LinComb& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const noexcept { return terms_; }
  void erase(const Key& key) { terms_.erase(key); }

  // Greatest key; the combination must be nonempty.
  const Key& leading() const { return terms_.rbegin()->first; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// a + c * b
template <class Key>
LinComb<Key> combine(LinComb<Key> a, const Rational& c, const LinComb<Key>& b) {
  a.add_scaled(b, c);
  return a;
}

}  // namespace beadcalc
