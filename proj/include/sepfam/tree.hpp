#pragma once

// Spanning trees and the correspondence with minimal separating families of
// maximum size (n - 1 members).
//
// phi_forward joins i and j whenever exactly one member of a family cuts
// them. On a minimal separating family with n - 1 members the result is a
// spanning tree, and phi_inverse recovers the family from the tree by taking,
// for each edge, the two components left after deleting that edge.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepfam/core.hpp"

namespace sepfam {

// Unordered edge, stored with first < second.
struct Edge {
  unsigned first;
  unsigned second;

  Edge(unsigned a, unsigned b) : first(std::min(a, b)), second(std::max(a, b)) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class LabeledGraph {
 public:
  explicit LabeledGraph(unsigned n) : n_(n) { check_ground_size(n); }

  LabeledGraph(unsigned n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    check_ground_size(n);
    for (const Edge& e : edges_) {
      if (e.first == e.second) {
        throw StructuralError("self-loop at vertex " + std::to_string(e.first));
      }
      check_element(n, e.first);
      check_element(n, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw StructuralError("duplicate edge");
    }
  }

  unsigned n() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(unsigned a, unsigned b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
  friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  unsigned n_;
  std::vector<Edge> edges_;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(unsigned n) : parent_(n + 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  unsigned find(unsigned x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already joined.
  bool unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<unsigned> parent_;
};

}  // namespace detail

inline bool is_spanning_tree(const LabeledGraph& g) {
  if (g.edges().size() + 1 != g.n()) return false;
  detail::DisjointSets sets(g.n());
  for (const Edge& e : g.edges()) {
    if (!sets.unite(e.first, e.second)) return false;
  }
  return true;
}

class LabeledTree {
 public:
  explicit LabeledTree(LabeledGraph g) : graph_(std::move(g)) {
    if (!is_spanning_tree(graph_)) {
      throw StructuralError("graph is not a spanning tree on 1.." +
                            std::to_string(graph_.n()));
    }
  }

  LabeledTree(unsigned n, std::vector<Edge> edges)
      : LabeledTree(LabeledGraph(n, std::move(edges))) {}

  unsigned n() const { return graph_.n(); }
  std::span<const Edge> edges() const { return graph_.edges(); }
  const LabeledGraph& graph() const { return graph_; }

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
  friend auto operator<=>(const LabeledTree&, const LabeledTree&) = default;

 private:
  LabeledGraph graph_;
};

struct PruferSequence {
  unsigned n = 2;
  std::vector<unsigned> seq;

  friend bool operator==(const PruferSequence&, const PruferSequence&) = default;
};

inline LabeledTree prufer_decode(const PruferSequence& s) {
  const unsigned n = s.n;
  if (n < 2) throw StructuralError("Prufer sequences need n >= 2");
  check_ground_size(n);
  if (s.seq.size() != n - 2) {
    throw StructuralError("Prufer sequence for n = " + std::to_string(n) +
                          " must have length " + std::to_string(n - 2) +
                          ", got " + std::to_string(s.seq.size()));
  }
  std::vector<unsigned> degree(n + 1, 1);
  for (unsigned v : s.seq) {
    check_element(n, v);
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (unsigned v : s.seq) {
    unsigned leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  unsigned a = 0;
  for (unsigned u = 1; u <= n; ++u) {
    if (degree[u] == 1) {
      if (a == 0) {
        a = u;
      } else {
        edges.emplace_back(a, u);
        break;
      }
    }
  }
  return LabeledTree(n, std::move(edges));
}

inline PruferSequence prufer_encode(const LabeledTree& t) {
  const unsigned n = t.n();
  if (n < 2) throw StructuralError("Prufer sequences need n >= 2");
  std::vector<std::vector<unsigned>> adj(n + 1);
  for (const Edge& e : t.edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<unsigned> degree(n + 1);
  for (unsigned v = 1; v <= n; ++v) degree[v] = static_cast<unsigned>(adj[v].size());
  std::vector<bool> removed(n + 1, false);
  PruferSequence out{n, {}};
  out.seq.reserve(n - 2);
  for (unsigned step = 0; step + 2 < n; ++step) {
    unsigned leaf = 1;
    while (removed[leaf] || degree[leaf] != 1) ++leaf;
    for (unsigned nb : adj[leaf]) {
      if (!removed[nb]) {
        out.seq.push_back(nb);
        --degree[nb];
        break;
      }
    }
    removed[leaf] = true;
  }
  return out;
}

// Edge {i, j} iff exactly one member of f cuts i and j.
inline LabeledGraph phi_forward(const Family& f) {
  const unsigned n = f.n();
  std::vector<Edge> edges;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      unsigned count = 0;
      for (const auto& p : f.members()) {
        if (cuts(p, i, j) && ++count > 1) break;
      }
      if (count == 1) edges.emplace_back(i, j);
    }
  }
  return LabeledGraph(n, std::move(edges));
}

// One bipartition per tree edge: delete the edge and split the vertex set
// into the component of the smaller endpoint and the rest.
inline Family phi_inverse(const LabeledTree& t) {
  const unsigned n = t.n();
  if (n < 2) throw StructuralError("phi_inverse needs a tree with n >= 2");
  std::vector<std::vector<unsigned>> adj(n + 1);
  for (const Edge& e : t.edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<Bipartition> members;
  members.reserve(n - 1);
  std::vector<unsigned> stack;
  for (const Edge& e : t.edges()) {
    Mask side = element_bit(e.first);
    stack.assign(1, e.first);
    while (!stack.empty()) {
      const unsigned v = stack.back();
      stack.pop_back();
      for (unsigned w : adj[v]) {
        if (v == e.first && w == e.second) continue;
        if (side & element_bit(w)) continue;
        side |= element_bit(w);
        stack.push_back(w);
      }
    }
    const Mask coblock = (side & element_bit(1)) ? ground_mask(n) & ~side : side;
    members.emplace_back(n, coblock);
  }
  return Family(n, std::move(members));
}

inline constexpr unsigned kMaxTreeEnumeration = 9;

inline void check_tree_enumeration(unsigned n) {
  if (n < 2 || n > kMaxTreeEnumeration) {
    throw CapacityError("tree enumeration supports 2 <= n <= " +
                        std::to_string(kMaxTreeEnumeration) + ", got " +
                        std::to_string(n));
  }
}

// n^(n-2), the number of labeled trees on n vertices.
inline std::uint64_t cayley_count(unsigned n) {
  if (n < 2) return 1;
  std::uint64_t r = 1;
  for (unsigned i = 0; i + 2 < n; ++i) r *= n;
  return r;
}

// Walks {1..n}^(n-2) in lexicographic order.
class PruferOdometer {
 public:
  explicit PruferOdometer(unsigned n) : current_{first_sequence(n)} {}

  std::optional<PruferSequence> next() {
    if (done_) return std::nullopt;
    PruferSequence out = current_;
    advance();
    return out;
  }

 private:
  static PruferSequence first_sequence(unsigned n) {
    check_tree_enumeration(n);
    return PruferSequence{n, std::vector<unsigned>(n - 2, 1)};
  }

  void advance() {
    auto& s = current_.seq;
    for (std::size_t i = s.size(); i-- > 0;) {
      if (s[i] < current_.n) {
        ++s[i];
        return;
      }
      s[i] = 1;
    }
    done_ = true;
  }

  PruferSequence current_;
  bool done_ = false;
};

// Single-consumer stream over all spanning trees, in Prufer order.
class SpanningTrees {
 public:
  explicit SpanningTrees(unsigned n) : odometer_(n) {}

  std::optional<LabeledTree> next() {
    auto s = odometer_.next();
    if (!s) return std::nullopt;
    return prufer_decode(*s);
  }

 private:
  PruferOdometer odometer_;
};

// Single-consumer stream over the n^(n-2) minimal separating families with
// n - 1 members, obtained as phi_inverse of every spanning tree.
class MinimalMaxFamilies {
 public:
  explicit MinimalMaxFamilies(unsigned n) : trees_(n) {}

  std::optional<Family> next() {
    auto t = trees_.next();
    if (!t) return std::nullopt;
    return phi_inverse(*t);
  }

 private:
  SpanningTrees trees_;
};

inline MinimalMaxFamilies enumerate_minimal_max_families(unsigned n) {
  return MinimalMaxFamilies(n);
}

// "1-2,2-3,3-4"
inline std::string format_edges(const LabeledGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.first) + '-' + std::to_string(e.second);
  }
  return out;
}

inline std::string format_edges(const LabeledTree& t) { return format_edges(t.graph()); }

// Parses comma-separated "i-j" tokens. Whitespace around tokens is ignored.
inline std::vector<Edge> parse_edge_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto number = [](std::string_view s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || v == 0) {
      throw StructuralError("bad vertex label '" + std::string(s) + "'");
    }
    return v;
  };
  std::vector<Edge> edges;
  text = trim(text);
  if (text.empty()) return edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = trim(text.substr(pos, comma - pos));
    const std::size_t dash = token.find('-');
    if (dash == std::string_view::npos) {
      throw StructuralError("edge token '" + std::string(token) + "' is not of the form i-j");
    }
    edges.emplace_back(number(trim(token.substr(0, dash))),
                       number(trim(token.substr(dash + 1))));
    pos = comma + 1;
  }
  return edges;
}

}  // namespace sepfam
