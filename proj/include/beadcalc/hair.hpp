#pragma once

// The hair map: a bead b^n on an edge becomes exp(n * leg) planted along it.
// Images live in B(*) (all legs unlabeled) and are truncated at a total degree.

#include <map>

#include "beadcalc/beads.hpp"
#include "beadcalc/relations.hpp"

namespace beadcalc {

inline constexpr int kDefaultTruncation = 7;

// Degree -> element; degrees with a zero piece are omitted.
using Graded = std::map<int, Vector>;

// Subdivides edge e k[e] times and hangs an unlabeled leg at each new vertex,
// with cyclic order (incoming segment, leg, outgoing segment).
Diagram plant_hairs(const Diagram& d, const std::vector<int>& k);

// Expansion of one presentation, canonicalized but not reduced. Throws
// TruncationTooSmall when D is below the diagram's degree.
Graded hair_expand_presentation(const Diagram& d, const Cocycle& x, int D);

// Same, reading exponents off the normal form of the key.
Graded hair_expand(const BeadedKey& key, int D);

// Sum of expansions, each degree reduced modulo AS/IHX. CapExceeded when
// D > cap.
Graded hair(const BeadedComb& v, int D, RelationEngine& engine, int cap = kDefaultTruncation);
Graded reduce_graded(const Graded& g, int D, RelationEngine& engine, int cap = kDefaultTruncation);

// Per degree 1..D: whether that piece of hair(v, D) vanishes.
std::map<int, bool> kernel_check(const BeadedComb& v, int D, RelationEngine& engine,
                                 int cap = kDefaultTruncation);

}  // namespace beadcalc
