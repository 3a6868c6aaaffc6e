#ifndef GRAKIT_RECONNECTAD_HPP
#define GRAKIT_RECONNECTAD_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exactla.hpp"
#include "tubings.hpp"

namespace grakit {

// ---------------------------------------------------------------- free monomials

// one monomial {T, V} per proper tube T, in ≺ order
inline std::vector<NestedSet> free_weight2_basis(const Graph& g) {
  if (g.size() < 2 || !g.connected()) throw std::invalid_argument("free_weight2_basis: need a connected graph with >= 2 vertices");
  std::vector<Mask> ts;
  for (Mask t : tubes(g, kMaxLabel))
    if (t != g.vertices()) ts.push_back(t);
  std::sort(ts.begin(), ts.end(), subset_precedes);
  std::vector<NestedSet> out;
  for (Mask t : ts) out.push_back({t, g.vertices()});
  return out;
}

// Composition of monomials of the free reconnectad on one generator per graph:
// alpha ∈ N⁺(Γ*_T), beta ∈ N⁺(Γ_T). A tube S of Γ*_T lifts to S∪T when that is
// connected in Γ, and stays S otherwise.
inline NestedSet free_compose(const Graph& g, Mask t, const NestedSet& alpha, const NestedSet& beta) {
  NestedSet out = beta;
  for (Mask s : alpha) out.push_back(g.connected_set(s | t) ? (s | t) : s);
  canonicalize(out);
  return out;
}

// ---------------------------------------------------------------- relation sets

struct RelationSet {
  std::vector<NestedSet> basis;      // weight-2 monomials {T, V}
  std::vector<SparseRow> vectors;    // coefficients over basis
  std::size_t span_dim = 0;
};

inline std::size_t span_dimension(const std::vector<SparseRow>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

namespace detail {
inline std::size_t weight2_index(const std::vector<NestedSet>& basis, Mask t) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].front() == t) return i;
  throw std::out_of_range("tube not in weight-2 basis");
}
}  // namespace detail

// e_T - Σ_{v∈T} e_{v} for 2 <= |T| < |V|, then Σ_v e_{v}
inline RelationSet gravity_relations(const Graph& g) {
  RelationSet rs;
  rs.basis = free_weight2_basis(g);
  for (const auto& m : rs.basis) {
    Mask t = m.front();
    if (popcount(t) < 2) continue;
    SparseRow r;
    r[detail::weight2_index(rs.basis, t)] = 1;
    for_each_label(t, [&](int v) { r[detail::weight2_index(rs.basis, bit(v))] = -1; });
    rs.vectors.push_back(std::move(r));
  }
  SparseRow all;
  for_each_label(g.vertices(), [&](int v) { all[detail::weight2_index(rs.basis, bit(v))] = 1; });
  rs.vectors.push_back(std::move(all));
  rs.span_dim = span_dimension(rs.vectors);
  return rs;
}

// one vector per edge (s<t): Σ_{T∋s} e_T - Σ_{T∋t} e_T over proper tubes
inline RelationSet hypercom_relations(const Graph& g) {
  RelationSet rs;
  rs.basis = free_weight2_basis(g);
  for (auto [s, t] : g.edges()) {
    SparseRow r;
    for (std::size_t i = 0; i < rs.basis.size(); ++i) {
      Mask tube = rs.basis[i].front();
      int c = ((tube >> s) & 1) - static_cast<int>((tube >> t) & 1);
      if (c) r[i] = c;
    }
    rs.vectors.push_back(std::move(r));
  }
  rs.span_dim = span_dimension(rs.vectors);
  return rs;
}

inline Rational pairing(const SparseRow& a, const SparseRow& b) {
  Rational s = 0;
  for (const auto& [i, v] : a) {
    auto it = b.find(i);
    if (it != b.end()) s += v * it->second;
  }
  return s;
}

// ---------------------------------------------------------------- grCom_X

// grCom_X for a graded X given by the degrees of its basis vectors.
// Basis of grCom_X(Γ): one X-basis index per vertex, factors in ascending label order.
struct ComXModel {
  std::vector<int> xdeg;
  // negative control: every proper composition picks up (-1)^{deg of the inner argument}
  bool sign_mutated = false;
};

inline ComXModel grcom_model() { return {{0}, false}; }
inline ComXModel gerst_model() { return {{0, 1}, false}; }  // index 0 = m, 1 = b

using Assign = std::vector<std::pair<int, int>>;  // (label, X index), ascending labels

struct ComXElement {
  std::map<Assign, Rational> terms;

  void add(const Assign& a, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(a, 0);
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  void add(const ComXElement& o, const Rational& c = 1) {
    for (const auto& [a, v] : o.terms) add(a, v * c);
  }
  friend bool operator==(const ComXElement&, const ComXElement&) = default;
};

inline int assign_degree(const ComXModel& m, const Assign& a) {
  int d = 0;
  for (auto [v, x] : a) d += m.xdeg.at(x);
  return d;
}

inline Mask assign_support(const Assign& a) {
  Mask s = 0;
  for (auto [v, x] : a) s |= bit(v);
  return s;
}

// sort factors into ascending labels; sign counts swapped pairs of odd factors
inline std::pair<Assign, int> koszul_sort(const ComXModel& m, Assign seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i].first > seq[j].first && (m.xdeg.at(seq[i].second) & 1) && (m.xdeg.at(seq[j].second) & 1)) ++inv;
  std::sort(seq.begin(), seq.end());
  return {std::move(seq), inv % 2 ? -1 : 1};
}

// μ_V^Γ(a ⊗ parts): a on Γ*_V, one part per component of Γ_V (ordered by minimum)
inline ComXElement grcom_x_compose(const ComXModel& m, const Graph& g, Mask v, const ComXElement& a,
                                   const std::vector<ComXElement>& parts) {
  require_subset(g, v);
  std::vector<Mask> comps = connected_components(induced(g, v));
  if (comps.size() != parts.size()) throw std::invalid_argument("grcom_x_compose: one part per component of Γ_V expected");
  Mask outer = g.vertices() & ~v;
  bool proper = v != 0 && v != g.vertices();
  ComXElement out;
  auto check = [](const ComXElement& e, Mask want) {
    for (const auto& [asg, c] : e.terms)
      if (assign_support(asg) != want) throw std::invalid_argument("grcom_x_compose: argument lives on the wrong vertex set");
  };
  check(a, outer);
  // concatenate a, then the parts in order; sort at the end
  ComXElement cat;
  for (const auto& [asg, c] : a.terms) cat.terms[asg] = c;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    check(parts[i], comps[i]);
    ComXElement next;
    for (const auto& [x, cx] : cat.terms)
      for (const auto& [y, cy] : parts[i].terms) {
        Assign seq = x;
        seq.insert(seq.end(), y.begin(), y.end());
        Rational c = cx * cy;
        if (m.sign_mutated && proper && (assign_degree(m, y) & 1)) c = -c;
        next.terms[seq] += c;
      }
    cat = std::move(next);
  }
  for (const auto& [seq, c] : cat.terms) {
    auto [sorted, s] = koszul_sort(m, seq);
    out.add(sorted, c * s);
  }
  return out;
}

inline ComXElement grcom_x_infinitesimal(const ComXModel& m, const Graph& g, Mask t, const ComXElement& a,
                                         const ComXElement& b) {
  return grcom_x_compose(m, g, t, a, {b});
}

inline ComXElement unit_element() {
  ComXElement e;
  e.terms[{}] = 1;
  return e;
}

inline std::vector<Assign> grcom_x_basis(const ComXModel& m, Mask verts) {
  std::vector<Assign> out{{}};
  for_each_label(verts, [&](int v) {
    std::vector<Assign> next;
    for (const auto& a : out)
      for (int x = 0; x < static_cast<int>(m.xdeg.size()); ++x) {
        Assign b = a;
        b.emplace_back(v, x);
        next.push_back(std::move(b));
      }
    out = std::move(next);
  });
  return out;
}

inline ComXElement basis_element(const Assign& a) {
  ComXElement e;
  e.terms[a] = 1;
  return e;
}

// relabel by a bijection of labels with the Koszul sign of the reordering
inline ComXElement relabel(const ComXModel& m, const ComXElement& e, const Relabel& p) {
  ComXElement out;
  for (const auto& [asg, c] : e.terms) {
    Assign seq;
    for (auto [v, x] : asg) seq.emplace_back(apply(p, v), x);
    auto [sorted, s] = koszul_sort(m, seq);
    out.add(sorted, c * s);
  }
  return out;
}

// ---------------------------------------------------------------- grGerst

// basis element of grGerst(Γ): b at the labels of s, m elsewhere
inline Assign gerst_assign(const Graph& g, Mask s) {
  Assign a;
  for_each_label(g.vertices(), [&](int v) { a.emplace_back(v, (s >> v) & 1 ? 1 : 0); });
  return a;
}

inline ComXElement gerst_basis(const Graph& g, Mask s) { return basis_element(gerst_assign(g, s)); }

inline Mask gerst_positions(const Assign& a) {
  Mask s = 0;
  for (auto [v, x] : a)
    if (x == 1) s |= bit(v);
  return s;
}

// #{u ∈ s : u < v}
inline int below_count(Mask s, int v) { return popcount(s & (bit(v) - 1)); }

// derivation with d(m) = b: d(basis_S) = Σ_{v∉S} (-1)^{#{u∈S : u<v}} basis_{S∪v}
inline ComXElement gerst_derivation(const Graph& g, const ComXElement& e) {
  ComXElement out;
  for (const auto& [asg, c] : e.terms) {
    Mask s = gerst_positions(asg), verts = assign_support(asg);
    for_each_label(verts & ~s, [&](int v) {
      Graph host = induced(g, verts);
      out.add(gerst_assign(host, s | bit(v)), below_count(s, v) % 2 ? Rational(-c) : c);
    });
  }
  return out;
}

// subsets of the vertex set of size k, in (size, lex) order
inline std::vector<Mask> subsets_of_size(Mask verts, int k) {
  std::vector<Mask> out;
  for (Mask s = verts;; s = (s - 1) & verts) {
    if (popcount(s) == k) out.push_back(s);
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end(), tube_less);
  return out;
}

inline std::size_t position(const std::vector<Mask>& v, Mask s) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), s) - v.begin());
}

// matrix of d from degree k to degree k+1
inline QMatrix gerst_derivation_matrix(const Graph& g, int k) {
  auto src = subsets_of_size(g.vertices(), k), dst = subsets_of_size(g.vertices(), k + 1);
  QMatrix d(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for_each_label(g.vertices() & ~src[j], [&](int v) {
      d.set(position(dst, src[j] | bit(v)), j, below_count(src[j], v) % 2 ? -1 : 1);
    });
  return d;
}

// Dual exterior model: ω_S with ∂ = dᵀ of degree -1, and H_v = left multiplication by ω_v.
inline ChainComplex gerst_dual_complex(const Graph& g) {
  int n = g.size();
  std::vector<std::size_t> dims;
  std::vector<QMatrix> ds;
  for (int k = 0; k <= n; ++k) {
    dims.push_back(subsets_of_size(g.vertices(), k).size());
    ds.push_back(k == 0 ? QMatrix(0, 1) : gerst_derivation_matrix(g, k - 1).transpose());
  }
  return ChainComplex(0, std::move(dims), std::move(ds));
}

// H = (1/n) Σ_v H_v from degree k to degree k+1
inline QMatrix averaged_homotopy(const Graph& g, int k) {
  auto src = subsets_of_size(g.vertices(), k), dst = subsets_of_size(g.vertices(), k + 1);
  QMatrix h(dst.size(), src.size());
  Rational w = Rational(1) / g.size();
  for (std::size_t j = 0; j < src.size(); ++j)
    for_each_label(g.vertices() & ~src[j], [&](int v) {
      h.add(position(dst, src[j] | bit(v)), j, below_count(src[j], v) % 2 ? Rational(-w) : w);
    });
  return h;
}

// ∂H + H∂ on degree k, as a square matrix
inline QMatrix homotopy_identity_defect(const Graph& g, int k) {
  int n = g.size();
  std::size_t dim = subsets_of_size(g.vertices(), k).size();
  QMatrix total(dim, dim);
  if (k < n) total = total + gerst_derivation_matrix(g, k).transpose() * averaged_homotopy(g, k);
  if (k > 0) total = total + averaged_homotopy(g, k - 1) * gerst_derivation_matrix(g, k - 1).transpose();
  return total + QMatrix::identity(dim).scaled(-1);
}

struct GravityDims {
  std::map<int, std::size_t> by_degree;
  std::size_t total = 0;
};

inline GravityDims gravity_dims(const Graph& g) {
  if (g.empty() || !g.connected()) throw std::invalid_argument("gravity_dims: graph must be connected and nonempty");
  GravityDims out;
  int n = g.size();
  for (int k = 0; k <= n; ++k) {
    std::size_t dim = subsets_of_size(g.vertices(), k).size();
    std::size_t ker = k == n ? dim : dim - rank(gerst_derivation_matrix(g, k));
    out.by_degree[k] = ker;
    out.total += ker;
  }
  return out;
}

// λ_Γ = d(m_Γ) = Σ_v basis_{v}
inline ComXElement gravity_generator(const Graph& g) { return gerst_derivation(g, gerst_basis(g, 0)); }

// graded count of grCom ∘_R S⁻¹: one line per V ⊆ V_Γ, in degree |V|
inline std::map<int, std::size_t> com_desusp_composite_dims(const Graph& g) {
  std::map<int, std::size_t> out;
  Mask all = g.vertices();
  for (Mask v = all;; v = (v - 1) & all) {
    std::size_t dim = 1;  // grCom(Γ*_V) and each S⁻¹(component) are one-dimensional
    int degree = 0;
    for (Mask c : connected_components(induced(g, v))) degree += popcount(c);
    out[degree] += dim;
    if (v == 0) break;
  }
  return out;
}

struct RelationCheck {
  std::string name;  // "grav1" or "grav2"
  Mask tube = 0;
  bool holds = false;
};

inline ComXElement lambda_compose(const Graph& g, Mask t) {
  const ComXModel m = gerst_model();
  Graph outer = reconnected_complement(g, t), inner = induced(g, t);
  return grcom_x_infinitesimal(m, g, t, gravity_generator(outer), gravity_generator(inner));
}

inline std::vector<RelationCheck> check_gravity_relations(const Graph& g) {
  if (g.size() < 2 || !g.connected()) throw std::invalid_argument("check_gravity_relations: need a connected graph with >= 2 vertices");
  std::vector<RelationCheck> out;
  for (Mask t : tubes(g, kMaxLabel)) {
    if (popcount(t) < 2 || t == g.vertices()) continue;
    ComXElement lhs;
    for_each_label(t, [&](int v) { lhs.add(lambda_compose(g, bit(v))); });
    out.push_back({"grav1", t, lhs == lambda_compose(g, t)});
  }
  ComXElement sum;
  for_each_label(g.vertices(), [&](int v) { sum.add(lambda_compose(g, bit(v))); });
  out.push_back({"grav2", g.vertices(), sum.terms.empty()});
  return out;
}

// ---------------------------------------------------------------- axioms

struct AxiomTally {
  std::size_t checked = 0, failed = 0;
  bool ok() const { return failed == 0; }
};

struct AxiomReport {
  AxiomTally unit, parallel, consecutive, equivariance;
  bool ok() const { return unit.ok() && parallel.ok() && consecutive.ok() && equivariance.ok(); }
};

inline AxiomReport check_axioms(const ComXModel& m, const Graph& g) {
  AxiomReport rep;
  auto note = [](AxiomTally& t, bool good) {
    ++t.checked;
    if (!good) ++t.failed;
  };
  auto basis = [&](Mask verts) {
    std::vector<ComXElement> out;
    for (const auto& a : grcom_x_basis(m, verts)) out.push_back(basis_element(a));
    return out;
  };
  auto deg = [&](const ComXElement& e) { return assign_degree(m, e.terms.begin()->first); };
  const Mask all = g.vertices();
  std::vector<Mask> ts = tubes(g, kMaxLabel);

  for (const auto& x : basis(all)) {
    note(rep.unit, grcom_x_compose(m, g, 0, x, {}) == x);
    note(rep.unit, grcom_x_compose(m, g, all, unit_element(), {x}) == x);
  }

  for (Mask t1 : ts)
    for (Mask t2 : ts) {
      if ((t1 & t2) || (g.boundary(t1) & t2) || t1 == all || t2 == all) continue;
      Graph c1 = reconnected_complement(g, t1), c2 = reconnected_complement(g, t2);
      for (const auto& x : basis(all & ~(t1 | t2)))
        for (const auto& y1 : basis(t1))
          for (const auto& y2 : basis(t2)) {
            ComXElement lhs = grcom_x_infinitesimal(m, g, t2, grcom_x_infinitesimal(m, c2, t1, x, y1), y2);
            ComXElement rhs = grcom_x_infinitesimal(m, g, t1, grcom_x_infinitesimal(m, c1, t2, x, y2), y1);
            ComXElement signed_rhs;
            signed_rhs.add(rhs, (deg(y1) * deg(y2)) % 2 ? -1 : 1);
            note(rep.parallel, lhs == signed_rhs);
          }
    }

  for (Mask t1 : ts)
    for (Mask t2 : ts) {
      if (t1 == t2 || !subset_of(t1, t2)) continue;  // equal tubes reduce to the unit axiom
      Graph in2 = induced(g, t2), c1 = reconnected_complement(g, t1);
      for (const auto& x : basis(all & ~t2))
        for (const auto& y : basis(t2 & ~t1))
          for (const auto& z : basis(t1)) {
            ComXElement lhs = grcom_x_infinitesimal(m, g, t2, x, grcom_x_infinitesimal(m, in2, t1, y, z));
            ComXElement rhs = grcom_x_infinitesimal(m, g, t1, grcom_x_infinitesimal(m, c1, t2 & ~t1, x, y), z);
            note(rep.consecutive, lhs == rhs);
          }
    }

  for (const auto& alpha : automorphisms(g))
    for (Mask t : ts)
      for (const auto& a : basis(all & ~t))
        for (const auto& b : basis(t)) {
          Mask at = apply(alpha, t);
          ComXElement lhs = relabel(m, grcom_x_infinitesimal(m, g, t, a, b), alpha);
          ComXElement rhs = grcom_x_infinitesimal(m, g, at, relabel(m, a, alpha), relabel(m, b, alpha));
          note(rep.equivariance, lhs == rhs);
        }
  return rep;
}

}  // namespace grakit

#endif  // GRAKIT_RECONNECTAD_HPP
