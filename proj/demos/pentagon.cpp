// The path on three vertices: its five maximal nested sets, their descents,
// and the h-vector they add up to.
#include <iostream>

#include <grakit/polycomb.hpp>

int main() {
  using namespace grakit;
  Graph p3 = family(Family::Path, 3);
  for (const auto& ns : maximal_nested(p3)) {
    for (Mask t : ns) std::cout << set_string(t) << ' ';
    std::cout << " descents " << descents(p3, ns).size() << '\n';
  }
  std::cout << "f =";
  for (const auto& f : f_vector(p3)) std::cout << ' ' << f;
  std::cout << "\nh =";
  for (const auto& h : h_poly_from_descents(p3).coeffs) std::cout << ' ' << h;
  std::cout << '\n';
}
