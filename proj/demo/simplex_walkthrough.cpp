// Builds the reference three-point simplex state, prints the stage data, then
// checks a few elements and solves one random interpolation problem.
#include <iostream>

#include "dimgroup/dimgroup.hpp"

using namespace dimgroup;

namespace {

void show(const ScalarField& field, const simplex::State& s, const simplex::Element& g, const char* name) {
  auto b = simplex::s_bounds(field, s, g);
  std::cout << name << ": " << simplex::to_string(simplex::classify(field, s, g)) << "\n  traces:";
  for (const auto& x : simplex::traces(s, g)) std::cout << " [" << to_string(x) << "]";
  std::cout << "\n  s- = " << to_string(b.s_minus) << " at point " << b.argmin << ", s+ = " << to_string(b.s_plus)
            << " at point " << b.argmax << '\n';
  if (g.top() >= 1) {
    auto c = simplex::verify_coset(field, s, g);
    std::cout << "  coset check at stage " << c.top << ": " << (c.passed() ? "ok" : "FAILED") << '\n';
  }
}

}  // namespace

int main() {
  const ScalarField& field = ScalarField::standard();
  auto s = simplex::build(simplex::reference_spec());
  std::cout << "m = " << s.m() << ", N = " << s.stages() << '\n';
  for (std::size_t k = 1; k <= s.stages(); ++k) {
    std::cout << "stage " << k << ": lambda = " << to_string(s.lambda(k)) << ", span rank " << s.span(k).rank()
              << ", v =";
    for (std::size_t j = 0; j < s.m(); ++j) std::cout << " [" << to_string(s.v(k, j)) << "]";
    std::cout << '\n';
  }

  SeededRng rng(1);
  show(field, s, simplex::Element(std::vector<Rational>{Rational(1)}), "v_0");
  for (int i = 0; i < 3; ++i) show(field, s, simplex::random_element(rng, s, 10), "random");

  auto p = simplex::random_interpolation_problem(field, rng, s, 10);
  auto z = simplex::interpolate(field, s, p.g1, p.g2, p.h1, p.h2);
  std::cout << "interpolant traces:";
  for (const auto& x : simplex::traces(s, z)) std::cout << " [" << to_string(x) << "]";
  std::cout << '\n';
}
