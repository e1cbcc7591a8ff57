#pragma once

// Canonical forms of diagrams modulo isomorphism, with the antisymmetry sign.
//
// The encoding is a byte string fixing the isomorphism class of the labeled
// multigraph. Its canonical representative (see representative()) carries
// the cyclic order "ascending half-edge ids" at every trivalent vertex; the
// sign of a diagram is the parity of cyclic-order reversals along any
// isomorphism onto that representative, or 0 when an odd automorphism exists.

#include <string>
#include <string_view>
#include <vector>

#include "beadcalc/diagram.hpp"

namespace beadcalc {

using Encoding = std::string;

struct CanonicalForm {
  Encoding encoding;
  int sign = 1;  // +1, -1, or 0 (the class vanishes under AS)

  bool zero() const noexcept { return sign == 0; }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonicalize(const Diagram& d);

// Half-edge level isomorphism from a diagram onto its canonical representative.
struct Isomorphism {
  std::vector<int> half_map;
  int sign = 1;
};

// Every isomorphism onto the representative, including the ones that permute
// parallel edges or flip self-loops. Intended for small diagrams.
struct FullLabeling {
  Encoding encoding;
  std::vector<Isomorphism> isomorphisms;
};

FullLabeling full_labeling(const Diagram& d);

// One isomorphism onto the representative together with the AS verdict.
struct Labeling {
  Encoding encoding;
  Isomorphism iso;
  bool zero = false;
};

Labeling label(const Diagram& d);

Diagram representative(const Encoding& encoding);

struct EncodingHeader {
  int trivalent = 0;
  int legs = 0;
  std::vector<std::string> labels;  // sorted
  int degree() const noexcept { return (trivalent + legs) / 2; }
};

EncodingHeader read_header(const Encoding& encoding);

// Parity of cyclic-order reversals along a half-edge map onto a diagram whose
// cyclic orders are ascending.
int iso_sign(const Diagram& d, const std::vector<int>& half_map);

std::string to_hex(const Encoding& encoding);
Encoding from_hex(std::string_view hex);

}  // namespace beadcalc
