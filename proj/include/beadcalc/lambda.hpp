#pragma once

// Vogel's algebra: totally antisymmetric elements of F_3 (legs "1","2","3"),
// acting on diagrams by replacing a trivalent vertex.

#include <map>
#include <string>

#include "beadcalc/relations.hpp"

namespace beadcalc {

inline constexpr int kLambdaMaxDegree = 5;

using LambdaElement = Vector;

// Renames legs through `perm`; labels not in the map are kept.
Vector relabel_legs(const Vector& v, const std::map<std::string, std::string>& perm);

// (1/6) sum of sign(s) s(v) over the permutations s of {1,2,3}. NotInF3 unless
// every term is connected, has a trivalent vertex and legs exactly 1,2,3.
LambdaElement antisymmetrize(const Vector& v);

// s(v) + v reduces to zero for each transposition s.
bool is_antisymmetric(const Vector& v, RelationEngine& engine);

// Replaces trivalent vertex `vertex` of d by each term of lambda. Leg i is
// glued to the i-th half-edge at `vertex`, reading the cyclic order from its
// least half-edge. NotTrivalent when `vertex` is a leg or out of range.
Vector insert(const LambdaElement& lambda, const Diagram& d, int vertex);
Vector insert(const LambdaElement& lambda, const Vector& v, int vertex);

// Inserts a at vertex 0 of each term representative of b.
LambdaElement lambda_mult(const LambdaElement& a, const LambdaElement& b);

Diagram tripod();
LambdaElement lambda_unit();

// The two pictures of t: a triangle, and a tripod with a bubble on leg 3.
Diagram t_picture_triangle();
Diagram t_picture_bubble();
LambdaElement builtin_t();

// Ladder with n rungs hanging from a junction carrying leg 3.
Diagram ladder(int n);
// Antisymmetrized ladder; CapExceeded when its degree exceeds `cap`.
LambdaElement builtin_x(int n, int cap = kLambdaMaxDegree);

int lambda_degree(const Vector& v);

// lhs - rhs vanishes; DegreeMismatch unless all terms have this degree and legs.
bool verify_scalar_relation(const Vector& lhs, const Vector& rhs, int degree, const std::vector<std::string>& legs,
                            RelationEngine& engine);

}  // namespace beadcalc
