#include "beadcalc/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "beadcalc/error.hpp"

namespace beadcalc {
namespace {

// Individualization-refinement over the vertices of one connected component.
class ComponentSearch {
 public:
  ComponentSearch(const Diagram& d, const std::vector<int>& verts) : d_(d), verts_(verts) {
    const int n = static_cast<int>(verts_.size());
    std::map<int, int> local;
    for (int i = 0; i < n; ++i) local[verts_[i]] = i;
    nbrs_.assign(n, {});
    mult_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int h : d_.incident(verts_[i])) {
        int j = local.at(d_.vertex_of(Diagram::partner(h)));
        nbrs_[i].push_back(j);
        if (i < j) ++mult_[i][j];
        if (i == j && (h & 1) == 0) ++mult_[i][i];
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) mult_[i][j] = mult_[j][i];

    // Trivalent vertices first, then legs by label.
    std::vector<std::pair<int, std::string>> keys(n);
    for (int i = 0; i < n; ++i) {
      int v = verts_[i];
      keys[i] = d_.is_leg(v) ? std::pair<int, std::string>{1, d_.leg_label(v)}
                             : std::pair<int, std::string>{0, std::string{}};
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(n);
    for (int i = 0; i < n; ++i) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), keys[i]);
      // Color = index of the first vertex of the cell in sorted order.
      colors[i] = static_cast<int>(it - sorted.begin());
    }
    initial_ = to_cell_starts(colors);
  }

  void run() { search(initial_); }

  const std::string& best() const { return best_; }
  // Each entry maps canonical position -> global vertex id.
  const std::vector<std::vector<int>>& best_orders() const { return best_orders_; }

 private:
  // Re-express dense color ranks as "number of vertices with smaller color".
  static std::vector<int> to_cell_starts(const std::vector<int>& ranks) {
    const int n = static_cast<int>(ranks.size());
    int k = ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end()) + 1;
    std::vector<int> count(k + 1, 0);
    for (int r : ranks) ++count[r + 1];
    for (int i = 1; i <= k; ++i) count[i] += count[i - 1];
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = count[ranks[i]];
    return out;
  }

  std::vector<int> refine(std::vector<int> colors) const {
    const int n = static_cast<int>(colors.size());
    std::vector<std::vector<int>> sig(n);
    std::vector<int> idx(n);
    for (;;) {
      for (int i = 0; i < n; ++i) {
        sig[i].clear();
        sig[i].push_back(colors[i]);
        for (int j : nbrs_[i]) sig[i].push_back(colors[j]);
        std::sort(sig[i].begin() + 1, sig[i].end());
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n);
      int distinct_old = 0, distinct_new = 0;
      {
        std::vector<int> c = colors;
        std::sort(c.begin(), c.end());
        distinct_old = static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
      }
      for (int p = 0; p < n; ++p) {
        if (p == 0 || sig[idx[p]] != sig[idx[p - 1]]) {
          next[idx[p]] = p;
          ++distinct_new;
        } else {
          next[idx[p]] = next[idx[p - 1]];
        }
      }
      colors = std::move(next);
      if (distinct_new == distinct_old) return colors;
    }
  }

  void search(std::vector<int> colors) {
    colors = refine(std::move(colors));
    const int n = static_cast<int>(colors.size());
    std::vector<int> size(n, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (colors[i] != target) continue;
      std::vector<int> child = colors;
      for (int j = 0; j < n; ++j)
        if (colors[j] == target && j != i) child[j] = target + 1;
      search(std::move(child));
    }
  }

  void leaf(const std::vector<int>& colors) {
    const int n = static_cast<int>(colors.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[colors[i]] = i;
    std::string enc;
    enc.reserve(n * (n + 3) / 2 + 8);
    for (int p = 0; p < n; ++p) {
      int v = verts_[order[p]];
      if (d_.is_leg(v)) {
        enc.push_back('\x01');
        enc.append(d_.leg_label(v));
        enc.push_back('\x00');
      } else {
        enc.push_back('\x00');
      }
    }
    for (int p = 0; p < n; ++p)
      for (int q = p; q < n; ++q) enc.push_back(static_cast<char>(mult_[order[p]][order[q]]));
    if (best_orders_.empty() || enc < best_) {
      best_ = std::move(enc);
      best_orders_.clear();
    } else if (enc != best_) {
      return;
    }
    for (int& i : order) i = verts_[i];
    best_orders_.push_back(std::move(order));
  }

  const Diagram& d_;
  const std::vector<int>& verts_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> initial_;
  std::string best_;
  std::vector<std::vector<int>> best_orders_;
};

struct ComponentResult {
  std::vector<int> verts;
  std::string encoding;
  std::vector<std::vector<int>> orders;
};

std::vector<ComponentResult> label_components(const Diagram& d) {
  std::vector<ComponentResult> out;
  for (auto& verts : d.components()) {
    ComponentResult r;
    r.verts = std::move(verts);
    ComponentSearch search(d, r.verts);
    search.run();
    r.encoding = search.best();
    r.orders = search.best_orders();
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ComponentResult& a, const ComponentResult& b) { return a.encoding < b.encoding; });
  return out;
}

void put_u16(std::string& s, int v) {
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>(v & 0xff));
}

Encoding global_encoding(const Diagram& d, const std::vector<int>& order) {
  const int n = d.vertex_count();
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  std::vector<std::vector<unsigned char>> mult(n, std::vector<unsigned char>(n, 0));
  for (const Edge& e : d.edges()) {
    int a = std::min(pos[e.tail], pos[e.head]);
    int b = std::max(pos[e.tail], pos[e.head]);
    ++mult[a][b];
  }
  Encoding enc;
  put_u16(enc, d.trivalent_count());
  put_u16(enc, d.leg_count());
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    if (d.is_leg(v)) {
      const std::string& label = d.leg_label(v);
      enc.push_back('\x01');
      enc.push_back(static_cast<char>(label.size()));
      enc.append(label);
    } else {
      enc.push_back('\x00');
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) enc.push_back(static_cast<char>(mult[a][b]));
  return enc;
}

std::vector<int> half_map_for_order(const Diagram& d, const std::vector<int>& order) {
  const int n = d.vertex_count();
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  const int m = d.edge_count();
  std::vector<std::tuple<int, int, int>> keys(m);
  for (int e = 0; e < m; ++e) {
    const Edge& edge = d.edges()[e];
    keys[e] = {std::min(pos[edge.tail], pos[edge.head]), std::max(pos[edge.tail], pos[edge.head]), e};
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> map(2 * m);
  for (int k = 0; k < m; ++k) {
    int e = std::get<2>(keys[k]);
    const Edge& edge = d.edges()[e];
    bool forward = pos[edge.tail] <= pos[edge.head];
    map[2 * e] = forward ? 2 * k : 2 * k + 1;
    map[2 * e + 1] = forward ? 2 * k + 1 : 2 * k;
  }
  return map;
}

// Half-edge permutations of a representative that fix every vertex.
std::vector<std::vector<int>> vertex_fixing_symmetries(const Diagram& rep) {
  const int m = rep.edge_count();
  std::vector<int> identity(2 * m);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> out{identity};
  int e = 0;
  while (e < m) {
    const Edge& first = rep.edges()[e];
    if (first.tail == first.head) {
      std::vector<std::vector<int>> next;
      for (const auto& g : out) {
        next.push_back(g);
        auto flipped = g;
        std::swap(flipped[2 * e], flipped[2 * e + 1]);
        next.push_back(std::move(flipped));
      }
      out = std::move(next);
      ++e;
      continue;
    }
    int end = e + 1;
    while (end < m && rep.edges()[end] == first) ++end;
    if (end - e > 1) {
      std::vector<int> perm(end - e);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::vector<int>> next;
      do {
        for (const auto& g : out) {
          auto h = g;
          for (int i = 0; i < end - e; ++i) {
            h[2 * (e + i)] = g[2 * (e + perm[i])];
            h[2 * (e + i) + 1] = g[2 * (e + perm[i]) + 1];
          }
          next.push_back(std::move(h));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      out = std::move(next);
    }
    e = end;
  }
  return out;
}

}  // namespace

int iso_sign(const Diagram& d, const std::vector<int>& half_map) {
  int sign = 1;
  for (int v = 0; v < d.trivalent_count(); ++v) {
    const CyclicOrder& c = d.cyclic(v);
    int a = half_map[c[0]], b = half_map[c[1]], x = half_map[c[2]];
    int inversions = (a > b) + (a > x) + (b > x);
    if (inversions & 1) sign = -sign;
  }
  return sign;
}

Labeling label(const Diagram& d) {
  auto comps = label_components(d);
  std::vector<int> order;
  for (const auto& c : comps) order.insert(order.end(), c.orders.front().begin(), c.orders.front().end());

  Labeling out;
  out.encoding = global_encoding(d, order);
  out.iso.half_map = half_map_for_order(d, order);
  out.iso.sign = iso_sign(d, out.iso.half_map);
  out.zero = d.has_self_loop();

  // Two isomorphisms of different sign differ by an odd automorphism.
  std::size_t offset = 0;
  for (const auto& c : comps) {
    if (out.zero) break;
    for (std::size_t k = 1; k < c.orders.size() && !out.zero; ++k) {
      auto alt = order;
      std::copy(c.orders[k].begin(), c.orders[k].end(), alt.begin() + offset);
      if (iso_sign(d, half_map_for_order(d, alt)) != out.iso.sign) out.zero = true;
    }
    offset += c.verts.size();
  }
  if (out.zero) out.iso.sign = 0;
  return out;
}

CanonicalForm canonicalize(const Diagram& d) {
  Labeling l = label(d);
  return CanonicalForm{std::move(l.encoding), l.iso.sign};
}

FullLabeling full_labeling(const Diagram& d) {
  auto comps = label_components(d);
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& c : comps) {
    offsets.push_back(total);
    total += c.verts.size();
  }

  std::vector<std::vector<int>> orders;
  std::vector<int> order(total);
  // slot_owner[s] = component placed in slot s; components with equal
  // encodings may be exchanged.
  std::vector<int> slot_owner(comps.size());
  std::iota(slot_owner.begin(), slot_owner.end(), 0);

  std::vector<std::vector<int>> assignments;
  {
    // Enumerate permutations within runs of identical encodings.
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < comps.size();) {
      std::size_t j = i + 1;
      while (j < comps.size() && comps[j].encoding == comps[i].encoding) ++j;
      runs.emplace_back(i, j);
      i = j;
    }
    assignments.push_back(slot_owner);
    for (auto [lo, hi] : runs) {
      if (hi - lo < 2) continue;
      std::vector<std::vector<int>> next;
      for (const auto& a : assignments) {
        auto b = a;
        std::sort(b.begin() + lo, b.begin() + hi);
        do next.push_back(b);
        while (std::next_permutation(b.begin() + lo, b.begin() + hi));
      }
      assignments = std::move(next);
    }
  }

  for (const auto& owners : assignments) {
    std::vector<std::size_t> choice(comps.size(), 0);
    for (;;) {
      for (std::size_t s = 0; s < comps.size(); ++s) {
        const auto& src = comps[owners[s]].orders[choice[s]];
        std::copy(src.begin(), src.end(), order.begin() + offsets[s]);
      }
      orders.push_back(order);
      std::size_t s = 0;
      while (s < comps.size()) {
        if (++choice[s] < comps[owners[s]].orders.size()) break;
        choice[s] = 0;
        ++s;
      }
      if (s == comps.size()) break;
    }
  }

  FullLabeling out;
  out.encoding = global_encoding(d, orders.front());
  Diagram rep = representative(out.encoding);
  auto symmetries = vertex_fixing_symmetries(rep);
  for (const auto& o : orders) {
    auto base = half_map_for_order(d, o);
    for (const auto& k : symmetries) {
      Isomorphism iso;
      iso.half_map.resize(base.size());
      for (std::size_t h = 0; h < base.size(); ++h) iso.half_map[h] = k[base[h]];
      iso.sign = iso_sign(d, iso.half_map);
      out.isomorphisms.push_back(std::move(iso));
    }
  }
  return out;
}

namespace {

struct Decoded {
  int trivalent = 0;
  int legs = 0;
  std::vector<std::string> labels;  // per position; empty for trivalent
  std::vector<bool> is_leg;
  std::size_t adjacency_offset = 0;
};

Decoded decode_prefix(const Encoding& enc) {
  auto fail = [] { throw Error(ErrorKind::Malformed, "malformed canonical encoding"); };
  if (enc.size() < 4) fail();
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(enc[i]); };
  Decoded out;
  out.trivalent = (byte(0) << 8) | byte(1);
  out.legs = (byte(2) << 8) | byte(3);
  std::size_t i = 4;
  const int n = out.trivalent + out.legs;
  for (int p = 0; p < n; ++p) {
    if (i >= enc.size()) fail();
    if (byte(i) == 0) {
      out.is_leg.push_back(false);
      out.labels.emplace_back();
      ++i;
    } else if (byte(i) == 1) {
      if (i + 1 >= enc.size()) fail();
      std::size_t len = byte(i + 1);
      if (i + 2 + len > enc.size()) fail();
      out.is_leg.push_back(true);
      out.labels.push_back(enc.substr(i + 2, len));
      i += 2 + len;
    } else {
      fail();
    }
  }
  out.adjacency_offset = i;
  if (enc.size() != i + static_cast<std::size_t>(n) * (n + 1) / 2) fail();
  return out;
}

}  // namespace

EncodingHeader read_header(const Encoding& encoding) {
  Decoded dec = decode_prefix(encoding);
  EncodingHeader h;
  h.trivalent = dec.trivalent;
  h.legs = dec.legs;
  for (std::size_t p = 0; p < dec.labels.size(); ++p)
    if (dec.is_leg[p]) h.labels.push_back(dec.labels[p]);
  std::sort(h.labels.begin(), h.labels.end());
  return h;
}

Diagram representative(const Encoding& encoding) {
  Decoded dec = decode_prefix(encoding);
  const int n = dec.trivalent + dec.legs;
  std::vector<int> vertex_at(n);
  int next_trivalent = 0, next_leg = dec.trivalent;
  std::vector<std::string> legs;
  for (int p = 0; p < n; ++p) {
    if (dec.is_leg[p]) {
      vertex_at[p] = next_leg++;
      legs.push_back(dec.labels[p]);
    } else {
      vertex_at[p] = next_trivalent++;
    }
  }
  if (next_trivalent != dec.trivalent) throw Error(ErrorKind::Malformed, "malformed canonical encoding");
  std::vector<Edge> edges;
  std::size_t i = dec.adjacency_offset;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int m = static_cast<unsigned char>(encoding[i++]);
      for (int k = 0; k < m; ++k) edges.push_back(Edge{vertex_at[a], vertex_at[b]});
    }
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (edges[e].tail >= 0 && edges[e].tail < n) incident[edges[e].tail].push_back(2 * e);
    if (edges[e].head >= 0 && edges[e].head < n) incident[edges[e].head].push_back(2 * e + 1);
  }
  std::vector<CyclicOrder> cyclic(dec.trivalent);
  for (int v = 0; v < dec.trivalent; ++v) {
    if (incident[v].size() != 3) throw Error(ErrorKind::Malformed, "malformed canonical encoding");
    std::sort(incident[v].begin(), incident[v].end());
    cyclic[v] = {incident[v][0], incident[v][1], incident[v][2]};
  }
  return Diagram(dec.trivalent, std::move(legs), std::move(edges), std::move(cyclic));
}

std::string to_hex(const Encoding& encoding) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(encoding.size() * 2);
  for (unsigned char c : encoding) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

Encoding from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorKind::Malformed, "invalid hex digit in canonical encoding");
  };
  if (hex.size() % 2) throw Error(ErrorKind::Malformed, "odd-length hex encoding");
  Encoding out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  decode_prefix(out);
  return out;
}

}  // namespace beadcalc
