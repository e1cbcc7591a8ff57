#pragma once

// JSON formats.
//
// Diagram: {"trivalent": t, "legs": [...], "edges": [[v, w], ...],
//           "cyclic": {"0": [e, e, e], ...}, "beads": {"e": "poly"}}
// Cyclic entries name edges; a self-loop's ends are written "e+" (tail) and
// "e-" (head). Combination: [{"coeff": "p/q", "diagram": <object or hex>}],
// with an extra "class" array for beaded terms.

#include <json.hpp>

#include "beadcalc/beads.hpp"
#include "beadcalc/hair.hpp"
#include "beadcalc/linear.hpp"

namespace beadcalc::io {

using Json = nlohmann::ordered_json;

// Throws Error(Malformed) on syntax errors.
Json parse(std::string_view text);

Diagram diagram_from_json(const Json& j);
Json diagram_to_json(const Diagram& d);

// A diagram object may carry "beads"; absent beads mean 1 everywhere.
BeadedDiagram beaded_from_json(const Json& j);
Json beaded_to_json(const BeadedDiagram& bd);

Rational coeff_from_json(const Json& j);

// Accepts a single diagram object or a combination array.
Vector vector_from_json(const Json& j);
Json vector_to_json(const Vector& v);

// Terms are {"coeff", "diagram": hex, "class": [...]} or a diagram object
// with beads, which is expanded multilinearly.
BeadedComb beaded_from_json_any(const Json& j);
Json beaded_comb_to_json(const BeadedComb& v);

}  // namespace beadcalc::io
