#ifndef GRAKIT_GRAPH_HPP
#define GRAKIT_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grakit {

// Vertex sets are bitmasks over labels: bit v <=> label v. Label order is bit
// order, which is the total order used everywhere (shuffle order included).
using Mask = std::uint64_t;
inline constexpr int kMaxLabel = 63;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline int highest(Mask m) { return 63 - std::countl_zero(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> labels_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& labels) {
  Mask m = 0;
  for (int v : labels) m |= bit(v);
  return m;
}

// iterate the labels of m in ascending order
template <class F>
void for_each_label(Mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

struct GraphError : std::invalid_argument {
  enum class Kind { DuplicateLabel, Loop, DanglingEndpoint, BadLabel, NotSubset, FamilyTooSmall, UnknownFamily };
  Kind kind;
  GraphError(Kind k, const std::string& what) : std::invalid_argument(what), kind(k) {}
};

class Graph {
 public:
  Graph() { adj_.fill(0); }

  Mask vertices() const { return verts_; }
  int size() const { return popcount(verts_); }
  bool empty() const { return verts_ == 0; }
  Mask neighbours(int v) const { return adj_[v]; }
  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for_each_label(verts_, [&](int a) {
      for_each_label(adj_[a] & ~((bit(a) << 1) - 1), [&](int b) { out.emplace_back(a, b); });
    });
    return out;
  }

  // neighbourhood of a whole set, excluding the set itself
  Mask boundary(Mask s) const {
    Mask n = 0;
    for_each_label(s, [&](int v) { n |= adj_[v]; });
    return n & ~s;
  }

  // vertices of s reachable from seed (seed ⊆ s) inside the induced graph on s
  Mask reach(Mask seed, Mask s) const {
    Mask seen = seed & s, frontier = seen;
    while (frontier) {
      Mask next = 0;
      for_each_label(frontier, [&](int v) { next |= adj_[v]; });
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool connected_set(Mask s) const { return s != 0 && reach(s & -s, s) == s; }
  bool connected() const { return verts_ == 0 || connected_set(verts_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.verts_ != b.verts_) return false;
    for (int v = 0; v <= kMaxLabel; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

  // unchecked builders; make_graph validates
  void add_vertex(int v) { verts_ |= bit(v); }
  void add_edge(int a, int b) {
    adj_[a] |= bit(b);
    adj_[b] |= bit(a);
  }

 private:
  Mask verts_ = 0;
  std::array<Mask, kMaxLabel + 1> adj_;
};

inline Graph make_graph(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges) {
  using K = GraphError::Kind;
  Graph g;
  for (int v : vertices) {
    if (v < 1 || v > kMaxLabel) throw GraphError(K::BadLabel, "vertex label out of range 1..63: " + std::to_string(v));
    if (g.vertices() & bit(v)) throw GraphError(K::DuplicateLabel, "duplicate vertex label " + std::to_string(v));
    g.add_vertex(v);
  }
  for (auto [a, b] : edges) {
    if (a == b) throw GraphError(K::Loop, "loop edge at " + std::to_string(a));
    bool ok = a >= 1 && a <= kMaxLabel && b >= 1 && b <= kMaxLabel && (g.vertices() & bit(a)) && (g.vertices() & bit(b));
    if (!ok) throw GraphError(K::DanglingEndpoint, "edge endpoint not a vertex: " + std::to_string(a) + "-" + std::to_string(b));
    g.add_edge(a, b);
  }
  return g;
}

enum class Family { Path, Cycle, Complete, Star };

inline Graph family(Family kind, int n) {
  using K = GraphError::Kind;
  int minimum = kind == Family::Cycle ? 3 : kind == Family::Star ? 1 : 0;
  if (n < minimum) throw GraphError(K::FamilyTooSmall, "family size below minimum");
  if (n > kMaxLabel) throw GraphError(K::BadLabel, "family size above 63");
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  switch (kind) {
    case Family::Path:
      for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
      break;
    case Family::Cycle:
      for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
      es.emplace_back(1, n);
      break;
    case Family::Complete:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
      break;
    case Family::Star:
      for (int i = 2; i <= n; ++i) es.emplace_back(1, i);
      break;
  }
  return make_graph(vs, es);
}

inline void require_subset(const Graph& g, Mask v) {
  if (!subset_of(v, g.vertices())) throw GraphError(GraphError::Kind::NotSubset, "vertex set not contained in graph");
}

inline Graph induced(const Graph& g, Mask v) {
  require_subset(g, v);
  Graph h;
  for_each_label(v, [&](int a) {
    h.add_vertex(a);
    for_each_label(g.neighbours(a) & v, [&](int b) { h.add_edge(a, b); });
  });
  return h;
}

// Γ*_V: delete V, join a and b whenever some path a..b runs through V only.
// Equivalently a,b adjacent in g, or both touch one connected piece of g_V.
inline Graph reconnected_complement(const Graph& g, Mask v) {
  require_subset(g, v);
  Mask rest = g.vertices() & ~v;
  Graph h;
  for_each_label(rest, [&](int a) {
    h.add_vertex(a);
    for_each_label(g.neighbours(a) & rest, [&](int b) { h.add_edge(a, b); });
  });
  Mask left = v;
  while (left) {
    Mask piece = g.reach(left & -left, v);
    left &= ~piece;
    Mask touch = g.boundary(piece) & rest;
    for_each_label(touch, [&](int a) {
      for_each_label(touch & ~bit(a), [&](int b) { h.add_edge(a, b); });
    });
  }
  return h;
}

// sorted by minimum element
inline std::vector<Mask> connected_components(const Graph& g) {
  std::vector<Mask> out;
  Mask left = g.vertices();
  while (left) {
    Mask c = g.reach(left & -left, g.vertices());
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

// A vertex permutation, as (source label, image label) over ascending sources.
using Relabel = std::vector<std::pair<int, int>>;

inline int apply(const Relabel& p, int v) {
  for (auto [a, b] : p)
    if (a == v) return b;
  throw std::out_of_range("label not in permutation");
}

inline Mask apply(const Relabel& p, Mask m) {
  Mask out = 0;
  for (auto [a, b] : p)
    if (m & bit(a)) out |= bit(b);
  return out;
}

inline std::vector<Relabel> automorphisms(const Graph& g, int cap = 10) {
  if (g.size() > cap) throw std::length_error("automorphism search above vertex cap");
  std::vector<int> vs = labels_of(g.vertices());
  int n = static_cast<int>(vs.size());
  std::vector<Relabel> out;
  std::vector<int> img(n, -1);
  Mask used = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      Relabel p;
      for (int k = 0; k < n; ++k) p.emplace_back(vs[k], img[k]);
      out.push_back(std::move(p));
      return;
    }
    int deg = popcount(g.neighbours(vs[i]));
    for (int w : vs) {
      if (used & bit(w)) continue;
      if (popcount(g.neighbours(w)) != deg) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) ok = g.adjacent(vs[k], vs[i]) == g.adjacent(img[k], w);
      if (!ok) continue;
      img[i] = w;
      used |= bit(w);
      self(self, i + 1);
      used &= ~bit(w);
    }
  };
  rec(rec, 0);
  return out;
}

inline Graph relabel(const Graph& g, const Relabel& p) {
  Graph h;
  for_each_label(g.vertices(), [&](int a) { h.add_vertex(apply(p, a)); });
  for (auto [a, b] : g.edges()) h.add_edge(apply(p, a), apply(p, b));
  return h;
}

}  // namespace grakit

#endif  // GRAKIT_GRAPH_HPP
