#ifndef GRAKIT_KOSZUL_HPP
#define GRAKIT_KOSZUL_HPP

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "exactla.hpp"
#include "reconnectad.hpp"
#include "tubings.hpp"

namespace grakit {

// ---------------------------------------------------------------- cobar complex

// Sign attached to splitting one ε factor of node graph G along its tube S,
// before the Koszul reordering of factors:
//   Printed:     (-1)^{|V_G|} · sgn(σ_S)
//   Alternative: -(-1)^{|V_G|-|S|} · sgn(σ_S)
// where sgn(σ_S) = (-1)^{#{x∉S, y∈S : x>y}}.
enum class CobarSign { Printed, Alternative };

inline int cobar_degree(const Graph& g, const NestedSet& ns) { return g.size() - static_cast<int>(ns.size()); }

inline std::vector<std::pair<NestedSet, int>> cobar_differential(const Graph& g, const NestedSet& ns,
                                                                  CobarSign policy = CobarSign::Alternative) {
  NestedTree tr = nested_tree(g, ns);
  // factors are ordered by ≺ on their tubes; each ε on a node has degree |λ|-1
  auto factor_order = [](std::vector<Mask> ts) {
    std::sort(ts.begin(), ts.end(), subset_precedes);
    return ts;
  };
  std::vector<Mask> order = factor_order(ns);
  std::map<NestedSet, int> acc;
  int before = 0;
  for (Mask node : order) {
    int i = tr.index_of(node);
    Graph gn = node_graph(g, tr, i);
    std::vector<int> kids = tr.children(i);
    for (Mask s : tubes(gn, kMaxLabel)) {
      if (s == gn.vertices()) continue;
      Mask lifted = s;
      for (int k : kids)
        if (g.boundary(tr.nodes[k]) & s) lifted |= tr.nodes[k];
      NestedSet next = ns;
      next.push_back(lifted);
      canonicalize(next);

      int nv = gn.size(), ns_ = popcount(s);
      int sign = policy == CobarSign::Printed ? ((nv % 2) ? -1 : 1) : (((nv - ns_) % 2) ? 1 : -1);
      int inv = 0;
      for_each_label(gn.vertices() & ~s, [&](int x) { inv += popcount(s & (bit(x) - 1)); });
      if (inv % 2) sign = -sign;
      if (before % 2) sign = -sign;

      // factor sequence after the split: node's slot becomes (outer, inner)
      NestedTree nt = nested_tree(g, next);
      auto degree = [&](Mask t) { return popcount(nt.lambda[nt.index_of(t)]) - 1; };
      std::vector<Mask> seq;
      for (Mask t : order) {
        seq.push_back(t);
        if (t == node) seq.push_back(lifted);
      }
      std::vector<Mask> target = factor_order(next);
      int swaps = 0;
      for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b) {
          auto pa = std::find(target.begin(), target.end(), seq[a]) - target.begin();
          auto pb = std::find(target.begin(), target.end(), seq[b]) - target.begin();
          if (pa > pb && (degree(seq[a]) & 1) && (degree(seq[b]) & 1)) ++swaps;
        }
      if (swaps % 2) sign = -sign;
      acc[next] += sign;
    }
    before += popcount(tr.lambda[i]) - 1;
  }
  std::vector<std::pair<NestedSet, int>> out;
  for (auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

struct CobarComplex {
  Graph host;
  std::vector<std::vector<NestedSet>> basis;  // basis[d] = nested sets of degree d
  ChainComplex chains;
};

inline CobarComplex cobar_complex(const Graph& g, CobarSign policy = CobarSign::Alternative, int cap = kDefaultCap) {
  if (g.empty() || !g.connected()) throw std::invalid_argument("cobar_complex: graph must be connected and nonempty");
  int n = g.size();
  std::vector<std::vector<NestedSet>> basis(n);
  for_each_nested(g, {true, false, cap}, [&](const NestedSet& ns) { basis[cobar_degree(g, ns)].push_back(ns); });
  std::vector<std::map<NestedSet, std::size_t>> index(n);
  for (int d = 0; d < n; ++d)
    for (std::size_t i = 0; i < basis[d].size(); ++i) index[d][basis[d][i]] = i;
  std::vector<std::size_t> dims;
  std::vector<QMatrix> ds;
  for (int d = 0; d < n; ++d) {
    dims.push_back(basis[d].size());
    QMatrix m(d == 0 ? 0 : basis[d - 1].size(), basis[d].size());
    if (d > 0)
      for (std::size_t j = 0; j < basis[d].size(); ++j)
        for (const auto& [t, c] : cobar_differential(g, basis[d][j], policy)) m.add(index[d - 1].at(t), j, c);
    ds.push_back(std::move(m));
  }
  return {g, std::move(basis), ChainComplex(0, std::move(dims), std::move(ds))};
}

// d² = 0 straight from the differential, without building a complex
inline bool cobar_square_zero(const Graph& g, CobarSign policy, int cap = kDefaultCap) {
  bool ok = true;
  for_each_nested(g, {true, false, cap}, [&](const NestedSet& ns) {
    if (!ok) return;
    std::map<NestedSet, int> acc;
    for (const auto& [t1, c1] : cobar_differential(g, ns, policy))
      for (const auto& [t2, c2] : cobar_differential(g, t1, policy)) acc[t2] += c1 * c2;
    for (const auto& kv : acc)
      if (kv.second != 0) ok = false;
  });
  return ok;
}

inline std::map<int, std::size_t> koszul_check(const Graph& g, int cap = kDefaultCap) {
  return cobar_complex(g, CobarSign::Alternative, cap).chains.homology_dims();
}

// ---------------------------------------------------------------- orderings and leading terms

enum class Ordering { Lex, Opposite };
enum class System { GrCom, Grav, Hyper };

inline bool monomial_less(const NestedSet& a, const NestedSet& b, Ordering o) {
  return o == Ordering::Lex ? nested_lex_less(a, b) : nested_lex_less(b, a);
}

inline Ordering system_ordering(System s) { return s == System::Hyper ? Ordering::Opposite : Ordering::Lex; }

// greatest monomial in the support under the ordering
inline NestedSet leading_term(const SparseRow& v, const std::vector<NestedSet>& basis, Ordering o) {
  if (v.empty()) throw std::invalid_argument("leading_term: zero vector");
  std::size_t best = v.begin()->first;
  for (const auto& [i, c] : v)
    if (monomial_less(basis.at(best), basis.at(i), o)) best = i;
  return basis[best];
}

inline RelationSet grcom_relations(const Graph& g) {
  RelationSet rs;
  if (g.size() != 2) return rs;  // generators live on single vertices only
  rs.basis = free_weight2_basis(g);
  SparseRow r;
  r[0] = 1;
  r[1] = -1;
  rs.vectors.push_back(r);
  rs.span_dim = 1;
  return rs;
}

inline RelationSet system_relations(const Graph& g, System s) {
  switch (s) {
    case System::GrCom: return grcom_relations(g);
    case System::Grav: return gravity_relations(g);
    case System::Hyper: return hypercom_relations(g);
  }
  return {};
}

// Leading terms of the whole weight-2 relation span: reduce the relations to
// echelon form with columns sorted greatest-first; pivot columns are the answer.
// Returned as the inner tubes T of the monomials {T, V}.
inline std::set<Mask> leading_terms(const Graph& g, System s) {
  RelationSet rs = system_relations(g, s);
  std::set<Mask> out;
  if (rs.vectors.empty()) return out;
  Ordering o = system_ordering(s);
  std::vector<std::size_t> perm(rs.basis.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return monomial_less(rs.basis[b], rs.basis[a], o); });
  std::vector<std::size_t> column(perm.size());
  for (std::size_t c = 0; c < perm.size(); ++c) column[perm[c]] = c;
  Echelon e;
  for (const auto& v : rs.vectors) {
    SparseRow r;
    for (const auto& [i, c] : v) r[column[i]] = c;
    e.insert(r);
  }
  for (auto c : e.pivot_columns()) out.insert(rs.basis[perm[c]].front());
  return out;
}

class LeadingTermCache {
 public:
  explicit LeadingTermCache(System s) : sys_(s) {}
  const std::set<Mask>& get(const Graph& g) {
    Key k{g.vertices(), g.edges()};
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, leading_terms(g, sys_)).first;
    return it->second;
  }

 private:
  using Key = std::pair<Mask, std::vector<std::pair<int, int>>>;
  System sys_;
  std::map<Key, std::set<Mask>> cache_;
};

inline bool is_normal(const Graph& g, const NestedSet& ns, LeadingTermCache& lts) {
  for (Mask t : ns) {
    if (t == g.vertices()) continue;
    Divisor dv = quadratic_divisor(g, ns, t);
    if (lts.get(dv.graph).count(dv.tube)) return false;
  }
  return true;
}

inline std::vector<NestedSet> normal_monomials(const Graph& g, System s, int cap = kDefaultCap) {
  LeadingTermCache lts(s);
  std::vector<NestedSet> out;
  std::size_t n = static_cast<std::size_t>(g.size());
  for_each_nested(g, {true, false, cap}, [&](const NestedSet& ns) {
    if (s == System::GrCom && ns.size() != n) return;  // only single-vertex node graphs carry a generator
    if (is_normal(g, ns, lts)) out.push_back(ns);
  });
  return out;
}

// ---------------------------------------------------------------- reduction / induction

inline NestedSet reduction(const Graph& g, const NestedSet& tau) {
  NestedTree tr = nested_tree(g, tau);
  Mask drop = 0;
  for (auto [v, w] : descents(g, tau)) drop |= bit(v);
  NestedSet out;
  for (std::size_t i = 0; i < tr.nodes.size(); ++i)
    if (!(tr.lambda[i] & drop) || tr.parent[i] < 0) out.push_back(tr.nodes[i]);
  canonicalize(out);
  return out;
}

inline NestedSet induction(const Graph& g, NestedSet omega) {
  canonicalize(omega);
  for (;;) {
    NestedTree tr = nested_tree(g, omega);
    int pick = -1;
    // canonical order ends with the largest tubes, so scan backwards for an inclusion-maximal one
    for (int i = tr.root(); i >= 0; --i) {
      if (popcount(tr.lambda[i]) < 2) continue;
      bool maximal = true;
      for (int j = tr.parent[i]; j >= 0; j = tr.parent[j])
        if (popcount(tr.lambda[j]) > 1) maximal = false;
      if (maximal) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return omega;
    int v = lowest(tr.lambda[pick]);
    Mask grown = bit(v);
    for (int k : tr.children(pick))
      if (g.neighbours(v) & tr.nodes[k]) grown |= tr.nodes[k];
    omega.push_back(grown);
    canonicalize(omega);
  }
}

}  // namespace grakit

#endif  // GRAKIT_KOSZUL_HPP
