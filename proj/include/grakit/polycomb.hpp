#ifndef GRAKIT_POLYCOMB_HPP
#define GRAKIT_POLYCOMB_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "tubings.hpp"

namespace grakit {

using BigInt = boost::multiprecision::cpp_int;

// coefficient i is the coefficient of t^i; trailing zeros trimmed
struct Polynomial {
  std::vector<BigInt> coeffs;

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  BigInt at(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : BigInt(0); }
  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// f_i = number of i-dimensional faces, i = 0..n-1
inline std::vector<BigInt> f_vector(const Graph& g, int cap = kDefaultCap) {
  if (g.empty() || !g.connected()) throw std::invalid_argument("f_vector: graph must be connected and nonempty");
  int n = g.size();
  std::vector<BigInt> f(n, 0);
  for_each_nested(g, {true, false, cap}, [&](const NestedSet& ns) { f[n - static_cast<int>(ns.size())] += 1; });
  return f;
}

// Σ f_i (t-1)^i
inline Polynomial h_poly_from_f(const std::vector<BigInt>& f) {
  Polynomial h;
  h.coeffs.assign(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    BigInt binom = 1;  // C(i,k)
    for (std::size_t k = 0; k <= i; ++k) {
      BigInt term = f[i] * binom;
      h.coeffs[k] += ((i - k) % 2) ? BigInt(-term) : term;
      binom = binom * (i - k) / (k + 1);
    }
  }
  h.trim();
  return h;
}

inline Polynomial h_poly_from_descents(const Graph& g, int cap = kDefaultCap) {
  Polynomial h;
  h.coeffs.assign(std::max(g.size(), 1), 0);
  std::size_t n = static_cast<std::size_t>(g.size());
  for_each_nested(g, {true, false, cap}, [&](const NestedSet& ns) {
    if (ns.size() == n) h.coeffs[descents(g, ns).size()] += 1;
  });
  h.trim();
  return h;
}

// even Betti numbers of the toric variety: b_{2i} = h_i
inline std::vector<BigInt> betti(const Graph& g, int cap = kDefaultCap) {
  Polynomial h = h_poly_from_f(f_vector(g, cap));
  h.coeffs.resize(static_cast<std::size_t>(g.size()), 0);
  return h.coeffs;
}

}  // namespace grakit

#endif  // GRAKIT_POLYCOMB_HPP
