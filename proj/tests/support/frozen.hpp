#pragma once

// Values produced by the brute-force oracle in tests/oracle and frozen here.
// test_oracle recomputes them; the engine tests compare against them.

#include <map>

namespace beadcalc::frozen {

struct Counts {
  int classes;    // nonvanishing isomorphism classes
  int dimension;  // modulo IHX
};

// Closed diagrams, connected or not.
inline const std::map<int, Counts> kClosed = {{1, {1, 1}}, {2, {3, 2}}, {3, {7, 3}}};
// Closed connected diagrams.
inline const std::map<int, Counts> kClosedConnected = {{1, {1, 1}}, {2, {2, 1}}, {3, {4, 1}}};
// Connected, legs 1,2,3, at least one trivalent vertex.
inline const std::map<int, Counts> kF3 = {{1, {0, 0}}, {2, {1, 1}}, {3, {4, 1}}};
// Legs 1,2, connected or not.
inline const std::map<int, Counts> kTwoLegs = {{1, {1, 1}}, {2, {2, 2}}, {3, {7, 4}}};
// A single leg: nothing survives in degrees 1..3.
inline const std::map<int, Counts> kOneLeg = {{1, {0, 0}}, {2, {0, 0}}, {3, {0, 0}}};

}  // namespace beadcalc::frozen
