#include "beadcalc/io.hpp"

#include "beadcalc/error.hpp"

namespace beadcalc::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Malformed, what); }

int to_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

// "3", "3+", "3-" (also the Unicode minus).
int half_from_json(const Json& j, const std::vector<Edge>& edges, int v) {
  int e = -1;
  int end = -1;  // 0 tail, 1 head, -1 unspecified
  if (j.is_number_integer()) {
    e = j.get<int>();
  } else if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.size() >= 4 && s.compare(s.size() - 3, 3, "−") == 0) {
      end = 1;
      s.resize(s.size() - 3);
    } else if (!s.empty() && (s.back() == '+' || s.back() == '-')) {
      end = s.back() == '+' ? 0 : 1;
      s.pop_back();
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) malformed("bad half-edge '" + j.get<std::string>() + "'");
    e = std::stoi(s);
  } else {
    malformed("cyclic entries must be edge indices");
  }
  if (e < 0 || e >= static_cast<int>(edges.size())) malformed("cyclic order names a missing edge");
  const Edge& edge = edges[e];
  if (end < 0) {
    if (edge.tail == v && edge.head == v)
      throw Error(ErrorKind::IncompleteCyclicOrder, "self-loop ends must be written e+ / e-");
    if (edge.tail == v) return 2 * e;
    if (edge.head == v) return 2 * e + 1;
    throw Error(ErrorKind::IncompleteCyclicOrder, "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
  }
  if ((end == 0 ? edge.tail : edge.head) != v)
    throw Error(ErrorKind::IncompleteCyclicOrder, "edge end is not at vertex " + std::to_string(v));
  return 2 * e + end;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Diagram diagram_from_json(const Json& j) {
  if (!j.is_object()) malformed("a diagram must be a JSON object");
  const int t = j.contains("trivalent") ? to_int(j["trivalent"], "trivalent") : 0;
  if (t < 0) malformed("trivalent must be nonnegative");
  std::vector<std::string> legs;
  if (j.contains("legs")) {
    if (!j["legs"].is_array()) malformed("legs must be an array");
    for (const auto& l : j["legs"]) {
      if (l.is_string()) legs.push_back(l.get<std::string>());
      else if (l.is_number_integer()) legs.push_back(std::to_string(l.get<long long>()));
      else malformed("leg labels must be strings");
    }
  }
  std::vector<Edge> edges;
  if (!j.contains("edges") || !j["edges"].is_array()) malformed("edges must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) malformed("each edge is a pair [v, w]");
    edges.push_back(Edge{to_int(e[0], "edge endpoint"), to_int(e[1], "edge endpoint")});
  }
  const int n = t + static_cast<int>(legs.size());
  for (const Edge& e : edges)
    if (e.tail < 0 || e.head < 0 || e.tail >= n || e.head >= n) malformed("edge endpoint out of range");
  // Report a wrong valence before any complaint about its cyclic order.
  std::vector<int> valence(n, 0);
  for (const Edge& e : edges) {
    ++valence[e.tail];
    ++valence[e.head];
  }
  for (int v = 0; v < n; ++v)
    if (valence[v] != (v < t ? 3 : 1))
      throw Error(ErrorKind::BadValence, "vertex " + std::to_string(v) + " has valence " + std::to_string(valence[v]));
  std::vector<CyclicOrder> cyclic(t, CyclicOrder{-1, -1, -1});
  if (j.contains("cyclic")) {
    const Json& c = j["cyclic"];
    auto read = [&](int v, const Json& entry) {
      if (v < 0 || v >= t) malformed("cyclic order given for a non-trivalent vertex");
      if (!entry.is_array() || entry.size() != 3)
        throw Error(ErrorKind::IncompleteCyclicOrder, "cyclic order of vertex " + std::to_string(v) + " needs three entries");
      for (int i = 0; i < 3; ++i) cyclic[v][i] = half_from_json(entry[i], edges, v);
    };
    if (c.is_object()) {
      for (const auto& [key, entry] : c.items()) {
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) malformed("cyclic keys are vertex indices");
        read(std::stoi(key), entry);
      }
    } else if (c.is_array()) {
      for (int v = 0; v < static_cast<int>(c.size()); ++v) read(v, c[v]);
    } else {
      malformed("cyclic must be an object or array");
    }
  }
  return Diagram(t, std::move(legs), std::move(edges), std::move(cyclic));
}

Json diagram_to_json(const Diagram& d) {
  Json j;
  j["trivalent"] = d.trivalent_count();
  j["legs"] = d.legs();
  Json edges = Json::array();
  for (const Edge& e : d.edges()) edges.push_back({e.tail, e.head});
  j["edges"] = std::move(edges);
  Json cyclic = Json::object();
  for (int v = 0; v < d.trivalent_count(); ++v) {
    Json entry = Json::array();
    for (int h : d.cyclic(v)) {
      int e = Diagram::edge_of(h);
      if (d.is_self_loop(e)) entry.push_back(std::to_string(e) + ((h & 1) ? "-" : "+"));
      else entry.push_back(e);
    }
    cyclic[std::to_string(v)] = std::move(entry);
  }
  j["cyclic"] = std::move(cyclic);
  return j;
}

BeadedDiagram beaded_from_json(const Json& j) {
  Diagram d = diagram_from_json(j);
  std::vector<LaurentPoly> beads(d.edge_count(), LaurentPoly::one());
  if (j.contains("beads")) {
    const Json& b = j["beads"];
    if (!b.is_object()) malformed("beads must be an object keyed by edge index");
    for (const auto& [key, value] : b.items()) {
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) malformed("bead keys are edge indices");
      int e = std::stoi(key);
      if (e >= d.edge_count()) malformed("bead on a missing edge");
      if (value.is_string()) beads[e] = LaurentPoly::parse(value.get<std::string>());
      else if (value.is_number_integer()) beads[e] = LaurentPoly::constant(value.get<long long>());
      else malformed("beads are polynomial strings");
    }
  }
  return BeadedDiagram(std::move(d), std::move(beads));
}

Json beaded_to_json(const BeadedDiagram& bd) {
  Json j = diagram_to_json(bd.diagram());
  Json beads = Json::object();
  for (int e = 0; e < bd.diagram().edge_count(); ++e)
    if (!bd.beads()[e].is_one()) beads[std::to_string(e)] = bd.beads()[e].to_string();
  if (!beads.empty()) j["beads"] = std::move(beads);
  return j;
}

Rational coeff_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  malformed("coeff must be a string \"p/q\" or an integer");
}

namespace {

const Json& terms_of(const Json& j, Json& holder) {
  if (j.is_array()) return j;
  if (j.is_object() && j.contains("edges")) {
    holder = Json::array({Json{{"coeff", "1"}, {"diagram", j}}});
    return holder;
  }
  if (j.is_object() && j.contains("terms") && j["terms"].is_array()) return j["terms"];
  malformed("expected a combination array or a diagram object");
}

Rational term_coeff(const Json& term) {
  if (!term.is_object() || !term.contains("diagram")) malformed("each term needs a diagram");
  return term.contains("coeff") ? coeff_from_json(term["coeff"]) : Rational(1);
}

Encoding encoding_from_hex(const Json& j) {
  Encoding enc = from_hex(j.get<std::string>());
  // Only canonical encodings are accepted as hex input.
  CanonicalForm f = canonicalize(representative(enc));
  if (f.encoding != enc || f.sign != 1) malformed("hex input is not a canonical encoding");
  return enc;
}

}  // namespace

Vector vector_from_json(const Json& j) {
  Json holder;
  Vector out;
  for (const Json& term : terms_of(j, holder)) {
    Rational c = term_coeff(term);
    const Json& d = term["diagram"];
    if (d.is_string()) {
      Encoding enc = encoding_from_hex(d);
      if (canonicalize(representative(enc)).zero()) continue;
      out.add(enc, c);
    } else {
      out += to_vector(diagram_from_json(d), c);
    }
  }
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& [enc, c] : v) out.push_back(Json{{"coeff", to_string(c)}, {"diagram", to_hex(enc)}});
  return out;
}

BeadedComb beaded_from_json_any(const Json& j) {
  Json holder;
  BeadedComb out;
  for (const Json& term : terms_of(j, holder)) {
    Rational c = term_coeff(term);
    const Json& d = term["diagram"];
    if (d.is_string()) {
      BeadedKey key{encoding_from_hex(d), {}};
      Diagram rep = representative(key.diagram);
      if (rep.leg_count() != 0) malformed("beaded diagrams must be closed");
      if (term.contains("class")) {
        if (!term["class"].is_array()) malformed("class must be an integer array");
        for (const auto& x : term["class"]) {
          if (!x.is_number_integer()) malformed("class must be an integer array");
          key.cls.push_back(x.get<long long>());
        }
      } else {
        key.cls.assign(rep.loop_degree(), 0);
      }
      if (static_cast<int>(key.cls.size()) != rep.loop_degree()) malformed("class length must equal the loop degree");
      // Renormalize: the given coordinates may not be the minimal ones.
      BeadedForm f = push_normal_form(rep, class_cocycle(rep, spanning_forest(rep), key.cls));
      if (!f.zero()) out.add(f.key, c * f.sign);
    } else {
      BeadedComb e = expand_multilinear(beaded_from_json(d));
      out += c * e;
    }
  }
  return out;
}

Json beaded_comb_to_json(const BeadedComb& v) {
  Json out = Json::array();
  for (const auto& [key, c] : v)
    out.push_back(Json{{"coeff", to_string(c)}, {"diagram", to_hex(key.diagram)}, {"class", key.cls}});
  return out;
}

}  // namespace beadcalc::io
