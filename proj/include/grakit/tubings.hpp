#ifndef GRAKIT_TUBINGS_HPP
#define GRAKIT_TUBINGS_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace grakit {

inline constexpr int kDefaultCap = 9;

// A nested set is a list of tubes kept in canonical order (size, then lex).
using NestedSet = std::vector<Mask>;

struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

inline void check_cap(const Graph& g, int cap) {
  if (g.size() > cap)
    throw CapExceeded("graph has " + std::to_string(g.size()) + " vertices, cap is " + std::to_string(cap));
}

// (size, lexicographic member list)
inline bool tube_less(Mask a, Mask b) {
  int sa = popcount(a), sb = popcount(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  return (a ^ b) & a & -(a ^ b);
}

inline void canonicalize(NestedSet& ns) { std::sort(ns.begin(), ns.end(), tube_less); }

inline bool is_tube(const Graph& g, Mask t) { return subset_of(t, g.vertices()) && g.connected_set(t); }

inline std::vector<Mask> tubes(const Graph& g, int cap = kDefaultCap) {
  if (!g.connected() || g.empty()) throw std::invalid_argument("tubes: host graph must be connected and nonempty");
  check_cap(g, cap);
  std::vector<Mask> out;
  Mask all = g.vertices();
  for (Mask s = all; s; s = (s - 1) & all)
    if (g.connected_set(s)) out.push_back(s);
  std::sort(out.begin(), out.end(), tube_less);
  return out;
}

inline bool compatible(const Graph& g, Mask a, Mask b) {
  if (subset_of(a, b) || subset_of(b, a)) return true;
  if (a & b) return false;
  return (g.boundary(a) & b) == 0;
}

inline bool is_nested(const Graph& g, const std::vector<Mask>& ts) {
  for (Mask t : ts)
    if (!is_tube(g, t)) throw std::invalid_argument("is_nested: member is not a tube");
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (ts[i] == ts[j] || !compatible(g, ts[i], ts[j])) return false;
  return true;
}

// a ≺ b: ascending sequence of a is a proper prefix of b's, or lexicographically
// greater. Both say: the lowest label where they differ belongs to b.
inline bool subset_precedes(Mask a, Mask b) {
  if (a == b) return false;
  Mask d = a ^ b;
  return (d & -d) & b;
}

inline Mask prec_max(const std::vector<Mask>& ts) {
  Mask best = ts.front();
  for (Mask t : ts)
    if (subset_precedes(best, t)) best = t;
  return best;
}

// ◁ with the recursive tie-break
inline bool nested_lex_less(NestedSet a, NestedSet b) {
  if (a.size() != b.size()) throw std::invalid_argument("nested_lex_less: unequal cardinality");
  while (!a.empty()) {
    Mask ua = 0, ub = 0;
    for (Mask t : a) ua |= t;
    for (Mask t : b) ub |= t;
    if (ua != ub) return subset_precedes(ua, ub);
    Mask ma = prec_max(a), mb = prec_max(b);
    a.erase(std::find(a.begin(), a.end(), ma));
    b.erase(std::find(b.begin(), b.end(), mb));
  }
  return false;
}

struct EnumOptions {
  bool augmented = true;
  bool include_empty = false;  // only meaningful when augmented is false
  int cap = kDefaultCap;
};

// Backtracking over proper tubes taken in ≺ order. Output nested sets are canonical.
template <class Sink>
void for_each_nested(const Graph& g, const EnumOptions& opt, Sink&& sink) {
  std::vector<Mask> all = tubes(g, opt.cap);
  std::vector<Mask> proper;
  for (Mask t : all)
    if (t != g.vertices()) proper.push_back(t);
  std::sort(proper.begin(), proper.end(), subset_precedes);
  std::size_t m = proper.size();
  std::vector<std::vector<char>> ok(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ok[i][j] = compatible(g, proper[i], proper[j]);
  std::vector<std::size_t> chosen;
  auto emit = [&] {
    if (!opt.augmented && chosen.empty() && !opt.include_empty) return;
    NestedSet ns;
    for (auto i : chosen) ns.push_back(proper[i]);
    if (opt.augmented) ns.push_back(g.vertices());
    canonicalize(ns);
    sink(ns);
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    emit();
    for (std::size_t i = from; i < m; ++i) {
      bool fits = true;
      for (auto c : chosen)
        if (!ok[c][i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

inline std::vector<NestedSet> enumerate_nested(const Graph& g, const EnumOptions& opt = {}) {
  std::vector<NestedSet> out;
  for_each_nested(g, opt, [&](const NestedSet& ns) { out.push_back(ns); });
  return out;
}

inline std::vector<NestedSet> maximal_nested(const Graph& g, int cap = kDefaultCap) {
  std::vector<NestedSet> out;
  std::size_t n = static_cast<std::size_t>(g.size());
  for_each_nested(g, {true, false, cap}, [&](const NestedSet& ns) {
    if (ns.size() == n) out.push_back(ns);
  });
  return out;
}

struct NestedTree {
  std::vector<Mask> nodes;   // canonical order, root last
  std::vector<int> parent;   // -1 for the root
  std::vector<Mask> lambda;  // λ(T) = T minus the tubes strictly inside it

  int index_of(Mask t) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == t) return static_cast<int>(i);
    return -1;
  }
  int root() const { return static_cast<int>(nodes.size()) - 1; }
  std::vector<int> children(int i) const {
    std::vector<int> out;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (parent[j] == i) out.push_back(static_cast<int>(j));
    return out;
  }
  // the node whose λ contains v
  int node_of(int v) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (lambda[i] & bit(v)) return static_cast<int>(i);
    return -1;
  }
};

inline NestedTree nested_tree(const Graph& g, NestedSet ns) {
  canonicalize(ns);
  if (ns.empty() || ns.back() != g.vertices()) throw std::invalid_argument("nested_tree: nested set is not augmented");
  NestedTree t;
  t.nodes = ns;
  std::size_t k = ns.size();
  t.parent.assign(k, -1);
  t.lambda.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    // canonical order is by size, so the first strict superset is the smallest
    for (std::size_t j = i + 1; j < k; ++j)
      if (ns[i] != ns[j] && subset_of(ns[i], ns[j])) {
        t.parent[i] = static_cast<int>(j);
        break;
      }
    Mask below = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (ns[j] != ns[i] && subset_of(ns[j], ns[i])) below |= ns[j];
    t.lambda[i] = ns[i] & ~below;
  }
  return t;
}

// graph carried by a tree node: (Γ_T)*_{T∖λ(T)} on the vertex set λ(T)
inline Graph node_graph(const Graph& g, const NestedTree& t, int i) {
  return reconnected_complement(induced(g, t.nodes[i]), t.nodes[i] & ~t.lambda[i]);
}

inline std::vector<std::pair<int, int>> descents(const Graph& g, const NestedSet& ns) {
  if (ns.size() != static_cast<std::size_t>(g.size())) throw std::invalid_argument("descents: nested set is not maximal");
  NestedTree t = nested_tree(g, ns);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.parent[i] < 0) continue;
    int c = lowest(t.lambda[i]), p = lowest(t.lambda[t.parent[i]]);
    if (c < p) out.emplace_back(c, p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Divisor {
  Graph graph;
  Mask tube;
};

inline Divisor quadratic_divisor(const Graph& g, const NestedSet& ns, Mask t) {
  NestedTree tr = nested_tree(g, ns);
  int i = tr.index_of(t);
  if (i < 0) throw std::invalid_argument("quadratic_divisor: tube not in nested set");
  if (tr.parent[i] < 0) throw std::invalid_argument("quadratic_divisor: tube is the root");
  int p = tr.parent[i];
  Mask parent = tr.nodes[p];
  Mask keep = tr.lambda[p] | tr.lambda[i];
  return {reconnected_complement(induced(g, parent), parent & ~keep), tr.lambda[i]};
}

inline std::string set_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_label(m, [&](int v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

inline std::string to_dot(const Graph& g, const NestedSet& ns) {
  NestedTree t = nested_tree(g, ns);
  std::ostringstream os;
  os << "digraph nested {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    os << "  n" << i << " [shape=box,label=\"" << set_string(t.nodes[i]) << " | \xCE\xBB=" << set_string(t.lambda[i])
       << "\"];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    if (t.parent[i] >= 0) os << "  n" << i << " -> n" << t.parent[i] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace grakit

#endif  // GRAKIT_TUBINGS_HPP
