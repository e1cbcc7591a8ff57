// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "beadcalc/hair.hpp"
#include "beadcalc/lambda.hpp"
#include "oracle.hpp"
#include "random_diagrams.hpp"

using namespace beadcalc;
using testing::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note << "exception: " << e.what() << "; ";
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    out.ok = false;
    out.note << "over time limit; ";
  }
  if (!out.ok) ++failures;
  std::printf("%s %s  %s  [%s] (%.2f s, limit %.0f s)\n", id, out.ok ? "PASS" : "FAIL", title, out.note.str().c_str(),
              s, limit_s);
  std::fflush(stdout);
}

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<std::string> random_legs(Rng& rng, int u) {
  std::vector<std::string> legs;
  for (int i = 0; i < u; ++i) legs.push_back(pick(rng, 0, 2) == 0 ? std::string(kHairLabel) : "L" + std::to_string(i));
  return legs;
}

// Random beads whose monomial exponents are multiples of `scale`.
BeadedDiagram random_beaded(Rng& rng, const Diagram& d, int scale) {
  std::vector<LaurentPoly> beads;
  for (int e = 0; e < d.edge_count(); ++e) {
    LaurentPoly p = LaurentPoly::monomial(1, scale * pick(rng, -2, 2));
    if (pick(rng, 0, 3) == 0) p += LaurentPoly::monomial(Rational(pick(rng, 1, 3), pick(rng, 1, 2)), scale * pick(rng, -2, 2));
    beads.push_back(p);
  }
  return BeadedDiagram(d, beads);
}

// PUSH on a beaded presentation: multiply the beads around v by b^k.
BeadedDiagram push_beads(const BeadedDiagram& bd, int v, long long k) {
  std::vector<LaurentPoly> beads = bd.beads();
  const Diagram& d = bd.diagram();
  for (int e = 0; e < d.edge_count(); ++e) {
    if (d.edges()[e].head == v) beads[e] = beads[e] * LaurentPoly::monomial(1, k);
    if (d.edges()[e].tail == v) beads[e] = beads[e] * LaurentPoly::monomial(1, -k);
  }
  return BeadedDiagram(d, beads);
}

BeadedDiagram relabel_beaded(Rng& rng, const BeadedDiagram& bd) {
  auto r = testing::random_relabel(rng, bd.diagram());
  std::vector<LaurentPoly> beads(bd.beads().size());
  for (std::size_t e = 0; e < beads.size(); ++e)
    beads[r.edge_map[e]] = r.flipped[e] ? bd.beads()[e].bar() : bd.beads()[e];
  return BeadedDiagram(r.diagram, beads);
}

struct Presentation {
  Rational coeff;
  Diagram diagram;
  Cocycle x;
};

Graded hair_of(const std::vector<Presentation>& ps, int D, RelationEngine& engine) {
  Graded raw;
  for (const auto& p : ps)
    for (auto& [deg, v] : hair_expand_presentation(p.diagram, p.x, D)) raw[deg] += p.coeff * v;
  return reduce_graded(raw, D, engine);
}

}  // namespace

int main() {
  RelationEngine engine;

  criterion("AC1", "AS suite: 1000 random diagrams of degree <= 5", 60, [&](Outcome& o) {
    Rng rng(1001);
    int loops = 0, vanishing = 0;
    for (int i = 0; i < 1000; ++i) {
      int degree = pick(rng, 1, 5);
      int u = pick(rng, 0, 2 * degree - 1);
      int t = 2 * degree - u;
      // A connected diagram needs u <= t + 2.
      bool connected = u <= t + 2 && pick(rng, 0, 1) == 1;
      Diagram d = testing::random_diagram(rng, t, random_legs(rng, u), connected);
      CanonicalForm f = canonicalize(d);
      o.require(canonicalize(testing::random_relabel(rng, d).diagram) == f, "relabeling changed the canonical form");
      CanonicalForm r = canonicalize(d.with_reversed_vertex(testing::random_trivalent(rng, d)));
      o.require(r.encoding == f.encoding && r.sign == -f.sign, "a single reversal did not negate the sign");
      if (d.has_self_loop()) {
        ++loops;
        o.require(f.zero(), "self-loop diagram not ZERO");
      }
      vanishing += f.zero();
    }
    o.note << loops << " with self-loops, " << vanishing << " vanish";
  });

  criterion("AC2", "IHX quotients of degree <= 3 match the brute-force oracle; echelon form shuffle-invariant", 300,
            [&](Outcome& o) {
              struct Case {
                std::vector<std::string> legs;
                bool connected, f_piece;
                int lo;
              };
              const Case cases[] = {{{}, false, false, 1}, {{"1", "2", "3"}, true, true, 2}};
              Rng rng(2002);
              for (const Case& c : cases) {
                for (int degree = c.lo; degree <= 3; ++degree) {
                  oracle::Result ref = oracle::quotient(degree, c.legs, c.connected, c.f_piece);
                  auto q = engine.quotient_basis(degree, c.legs, c.connected, c.f_piece);
                  o.note << (c.legs.empty() ? "A" : "F3") << degree << "=" << q->dimension() << "/" << ref.dimension
                         << " ";
                  o.require(static_cast<int>(q->dimension()) == ref.dimension, "dimension differs from the oracle");
                  o.require(q->classes.size() == ref.nonzero.size(), "class count differs from the oracle");
                  auto gens = engine.ihx_generators(degree, c.legs, c.connected || c.f_piece);
                  RelationSpan base = RelationSpan::echelonize(gens);
                  for (int s = 0; s < 10; ++s) {
                    std::shuffle(gens.begin(), gens.end(), rng);
                    o.require(RelationSpan::echelonize(gens) == base, "echelon form depends on generator order");
                  }
                }
              }
            });

  criterion("AC3", "t_pic1 - 1/2 t_pic2 reduces to zero in F3", 60, [&](Outcome& o) {
    Vector diff = to_vector(t_picture_triangle()) - Rational(1, 2) * to_vector(t_picture_bubble());
    Vector r = engine.reduce(diff);
    o.require(r.empty(), "difference does not vanish");
    o.require(!engine.reduce(to_vector(t_picture_triangle())).empty(), "t itself vanishes");
    o.note << "reduced terms: " << r.size();
  });

  criterion("AC4", "bead-degree grading on 500 random beaded diagrams", 300, [&](Outcome& o) {
    Rng rng(4004);
    int done = 0, relations = 0, degree0 = 0, degree1 = 0;
    while (done < 500) {
      Diagram d = testing::random_closed(rng, pick(rng, 2, 4));
      BeadedDiagram bd = random_beaded(rng, d, pick(rng, 0, 3));
      BeadedComb v = expand_multilinear(bd);
      auto parts = split_by_bead_degree(v);
      if (!parts.empty() && parts.rbegin()->first > 3) continue;
      ++done;

      BeadedDiagram moved = push_beads(bd, pick(rng, 0, d.vertex_count() - 1), pick(rng, -3, 3));
      o.require(split_by_bead_degree(expand_multilinear(moved)) == parts, "PUSH changed the decomposition");
      o.require(split_by_bead_degree(expand_multilinear(bd.reoriented(pick(rng, 0, d.edge_count() - 1)))) == parts,
                "reorientation changed the decomposition");
      o.require(split_by_bead_degree(expand_multilinear(relabel_beaded(rng, bd))) == parts,
                "relabeling changed the decomposition");

      // Beaded IHX at an edge of a term: homogeneous of the term's bead degree.
      for (const auto& [key, c] : v) {
        Diagram rep;
        Cocycle z = key_cocycle(key, &rep);
        for (int e = 0; e < rep.edge_count(); ++e) {
          if (rep.is_self_loop(e)) continue;
          BeadedComb r = beaded_ihx(rep, z, e);
          auto rs = split_by_bead_degree(r);
          o.require(rs.size() <= 1, "beaded IHX relation mixes bead degrees");
          if (!rs.empty()) o.require(rs.begin()->first == bead_degree(key.cls), "relation left the term's degree");
          auto shifted = split_by_bead_degree(v + r);
          for (const auto& [p, part] : shifted) {
            BeadedComb expected = parts.count(p) ? parts.at(p) : BeadedComb();
            if (rs.count(p)) expected += rs.at(p);
            o.require(part == expected, "adding a relation moved terms between degrees");
          }
          ++relations;
          break;
        }
        break;
      }

      if (parts.count(0)) {
        ++degree0;
        o.require(embed_classical(psi(parts.at(0))) == parts.at(0), "psi round trip failed");
      }
      if (parts.count(1)) {
        ++degree1;
        const BeadedComb& one = parts.at(1);
        for (int p = 2; p <= 3; ++p) {
          BeadedComb img = phi(p, one);
          o.require(img.size() == one.size(), "phi identified two terms");
          o.require(split_by_bead_degree(img).size() == 1 && split_by_bead_degree(img).count(p) == 1,
                    "phi did not land in bead degree p");
          o.require(unphi(p, img) == one, "unphi o phi is not the identity");
        }
      }
    }
    o.note << relations << " IHX rewrites, " << degree0 << " degree-0 parts, " << degree1 << " degree-1 parts";
  });

  // Inputs shared by AC5 and AC8.
  struct HairCase {
    std::vector<Presentation> a, b;
    BeadedComb normal;
    int D;
  };
  std::vector<HairCase> hair_cases;
  {
    Rng rng(5005);
    while (hair_cases.size() < 200) {
      HairCase hc;
      int n = pick(rng, 1, 3);
      for (int i = 0; i < n; ++i) {
        Diagram d = testing::random_closed(rng, 2);
        Cocycle x = testing::random_cocycle(rng, d, 2);
        Rational c(pick(rng, -3, 3), pick(rng, 1, 2));
        if (c == 0) c = 1;
        hc.a.push_back({c, d, x});
        auto r = testing::random_relabel(rng, d);
        hc.b.push_back({c, r.diagram, r.transport(testing::random_push(rng, d, x, 2, 3))});
        BeadedForm f = push_normal_form(d, x);
        if (!f.zero()) hc.normal.add(f.key, c * f.sign);
      }
      hc.D = hc.a[0].diagram.degree() + 2;
      hair_cases.push_back(std::move(hc));
    }
  }

  criterion("AC5", "hair map agrees on PUSH-related presentations (200 two-loop elements, D = base + 2)", 600,
            [&](Outcome& o) {
              int nonzero_hairy = 0;
              for (const auto& hc : hair_cases) {
                Graded ha = hair_of(hc.a, hc.D, engine);
                Graded hb = hair_of(hc.b, hc.D, engine);
                o.require(ha == hb, "images differ");
                o.require(hair(hc.normal, hc.D, engine) == ha, "normal-form image differs");
                for (const auto& [deg, v] : ha)
                  if (deg > hc.a[0].diagram.degree()) {
                    ++nonzero_hairy;
                    break;
                  }
              }
              o.note << nonzero_hairy << " inputs with nonzero hairy part";
            });

  criterion("AC6", "bead degree zero: hair is the leg-free embedding; distinct basis images", 300, [&](Outcome& o) {
    Rng rng(6006);
    int elements = 0;
    for (int i = 0; i < 100; ++i) {
      BeadedComb v;
      const int loops = pick(rng, 2, 4);
      for (int k = pick(rng, 1, 3); k > 0; --k) {
        Diagram d = testing::random_closed(rng, loops);
        BeadedForm f = push_normal_form(d, Cocycle(d.edge_count(), 0));
        if (!f.zero()) v.add(f.key, Rational(pick(rng, 1, 5)) * f.sign);
      }
      if (v.empty()) continue;
      ++elements;
      Vector classical = psi(v);
      const int base = loops - 1;
      for (int D = base; D <= kDefaultTruncation; ++D) {
        Graded raw;
        for (const auto& [key, c] : v)
          for (auto& [deg, piece] : hair_expand(key, D)) raw[deg] += c * piece;
        Graded expected;
        if (!classical.empty()) expected[base] = classical;
        o.require(raw == expected, "raw image is not the leg-free embedding");
        Graded reduced = hair(v, D, engine);
        Graded want;
        Vector r = engine.reduce(classical);
        if (!r.empty()) want[base] = r;
        o.require(reduced == want, "reduced image differs from the reduced embedding");
      }
    }
    std::set<std::pair<int, std::string>> images;
    int count = 0;
    for (int degree = 1; degree <= 3; ++degree) {
      for (const Encoding& b : engine.quotient_basis(degree, {}, false)->basis) {
        Vector e;
        e.add(b, 1);
        Graded h = hair(embed_classical(e), degree + 1, engine);
        o.require(!h.empty(), "basis element has zero image");
        std::ostringstream key;
        for (const auto& [deg, v] : h)
          for (const auto& [enc, c] : v) key << deg << ":" << to_hex(enc) << "*" << to_string(c) << ";";
        images.insert({degree, key.str()});
        ++count;
      }
    }
    o.require(static_cast<int>(images.size()) == count, "two basis elements share an image");
    o.note << elements << " zero-class elements, " << count << " basis elements";
  });

  criterion("AC7", "Lambda: unit law, vertex independence, commutativity on t, x1, x2", 600, [&](Outcome& o) {
    Rng rng(7007);
    LambdaElement y = lambda_unit();
    for (int i = 0; i < 100; ++i) {
      int t = 2 * pick(rng, 1, 3);
      int u = 2 * pick(rng, 0, 1);
      Diagram d = testing::random_diagram(rng, t, random_legs(rng, u), true);
      o.require(insert(y, d, testing::random_trivalent(rng, d)) == to_vector(d), "Y is not a unit");
    }
    auto f3 = enumerate(engine.catalog(), 3, {"1", "2", "3"}, true);
    int pairs = 0;
    for (int i = 0; i < 30; ++i) {
      Vector raw;
      for (const auto& f : f3)
        if (read_header(f.encoding).trivalent > 0) raw.add(f.encoding, Rational(pick(rng, -3, 3)));
      LambdaElement lambda = antisymmetrize(raw);
      o.require(is_antisymmetric(lambda, engine), "antisymmetrized element fails the certificate");
      int target = pick(rng, 1, 3);
      Diagram d = testing::random_diagram(rng, 2 * target - (target == 3 ? 2 : 0),
                                          target == 3 ? std::vector<std::string>{"a", "b"} : std::vector<std::string>{},
                                          true);
      o.require(d.degree() + lambda_degree(lambda) - 2 <= 4, "total degree above 4");
      Vector first = insert(lambda, d, 0);
      for (int v = 1; v < d.trivalent_count(); ++v) {
        o.require(engine.reduce(insert(lambda, d, v) - first).empty(), "insertion depends on the vertex");
        ++pairs;
      }
    }
    const LambdaElement gens[] = {builtin_t(), builtin_x(1), builtin_x(2)};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        if (i == 2 && j == 2) continue;  // degree 6 lies above the Lambda cap
        o.require(engine.reduce(lambda_mult(gens[i], gens[j]) - lambda_mult(gens[j], gens[i])).empty(),
                  "product does not commute");
      }
    o.note << pairs << " vertex pairs";
  });

  criterion("AC8", "truncation coherence on the AC5 inputs", 600, [&](Outcome& o) {
    for (const auto& hc : hair_cases) {
      Graded longer = hair_of(hc.a, hc.D + 1, engine);
      longer.erase(hc.D + 1);
      o.require(longer == hair_of(hc.a, hc.D, engine), "presentation images disagree below D");
      Graded n1 = hair(hc.normal, hc.D + 1, engine);
      n1.erase(hc.D + 1);
      o.require(n1 == hair(hc.normal, hc.D, engine), "normal-form images disagree below D");
    }
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
