#include "beadcalc/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "beadcalc/error.hpp"

namespace beadcalc {

Diagram::Diagram(int trivalent, std::vector<std::string> legs, std::vector<Edge> edges,
                 std::vector<CyclicOrder> cyclic)
    : trivalent_(trivalent), legs_(std::move(legs)), edges_(std::move(edges)),
      cyclic_(std::move(cyclic)) {
  if (trivalent_ < 0) throw Error(ErrorKind::Malformed, "negative trivalent count");
  const int n = vertex_count();

  std::set<std::string_view> seen;
  for (const auto& label : legs_) {
    if (label.empty()) throw Error(ErrorKind::Malformed, "empty leg label");
    if (label == kHairLabel) continue;
    if (!seen.insert(label).second)
      throw Error(ErrorKind::DuplicateLegLabel, "duplicate leg label '" + label + "'");
  }

  incident_.assign(n, {});
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.tail < 0 || edge.tail >= n || edge.head < 0 || edge.head >= n)
      throw Error(ErrorKind::Malformed, "edge " + std::to_string(e) + " has an endpoint out of range");
    incident_[edge.tail].push_back(2 * e);
    incident_[edge.head].push_back(2 * e + 1);
  }
  for (int v = 0; v < n; ++v) {
    const std::size_t want = is_leg(v) ? 1 : 3;
    if (incident_[v].size() != want)
      throw Error(ErrorKind::BadValence, "vertex " + std::to_string(v) + " has valence " +
                                             std::to_string(incident_[v].size()) + ", expected " +
                                             std::to_string(want));
  }

  if (static_cast<int>(cyclic_.size()) != trivalent_)
    throw Error(ErrorKind::IncompleteCyclicOrder, "cyclic orders must be given for every trivalent vertex");
  for (int v = 0; v < trivalent_; ++v) {
    CyclicOrder sorted = cyclic_[v];
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), incident_[v].begin()))
      throw Error(ErrorKind::IncompleteCyclicOrder,
                  "cyclic order at vertex " + std::to_string(v) + " does not list its three half-edges");
  }
}

std::vector<std::vector<int>> Diagram::components() const {
  const int n = vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

int Diagram::component_count() const { return static_cast<int>(components().size()); }

int Diagram::loop_degree() const {
  return edge_count() - vertex_count() + component_count();
}

bool Diagram::has_self_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.tail == e.head; });
}

Diagram Diagram::with_reversed_vertex(int v) const {
  Diagram out = *this;
  std::swap(out.cyclic_[v][1], out.cyclic_[v][2]);
  return out;
}

int DiagramBuilder::add_trivalent() {
  nodes_.push_back(Node{});
  return static_cast<int>(nodes_.size()) - 1;
}

int DiagramBuilder::add_leg(std::string label) {
  nodes_.push_back(Node{true, std::move(label), {-1, -1, -1}});
  return static_cast<int>(nodes_.size()) - 1;
}

int DiagramBuilder::add_edge(int tail, int head) {
  edges_.push_back(Edge{tail, head});
  return static_cast<int>(edges_.size()) - 1;
}

void DiagramBuilder::set_cyclic(int v, CyclicOrder halves) { nodes_[v].cyclic = halves; }

Diagram DiagramBuilder::build() const {
  std::vector<int> renumber(nodes_.size());
  int next = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (!nodes_[i].leg) renumber[i] = next++;
  const int trivalent = next;
  std::vector<std::string> legs;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].leg) {
      renumber[i] = next++;
      legs.push_back(nodes_[i].label);
    }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back(Edge{renumber[e.tail], renumber[e.head]});
  std::vector<CyclicOrder> cyclic(trivalent);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (!nodes_[i].leg) cyclic[renumber[i]] = nodes_[i].cyclic;
  return Diagram(trivalent, std::move(legs), std::move(edges), std::move(cyclic));
}

}  // namespace beadcalc
