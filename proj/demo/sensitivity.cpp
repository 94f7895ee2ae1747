// e_k = x^k - t^k changes sign on [0, 1] with a simple root at t. Moving the
// left endpoint to t turns that root into a zero minimum. At rational points
// the same elements never vanish.
#include <iostream>

#include "dimgroup/dimgroup.hpp"

using namespace dimgroup;

int main() {
  const ScalarField& field = ScalarField::standard();
  const DomainInterval unit = DomainInterval::unit(field);
  const std::vector<Rational> probes{Rational(0), make_rational(1, 7), make_rational(1, 2), Rational(1)};

  for (std::size_t k = 1; k <= 4; ++k) {
    auto w = ex3::sensitivity_witness(field, k, ex3::Side::Left);
    auto on_unit = ex3::classify(field, w.element, unit);
    auto on_moved = ex3::classify(field, w.element, w.domain);

    std::cout << "e_" << k << ": on [0, 1] " << ex3::to_string(on_unit.verdict) << ", on [t, 1] "
              << ex3::to_string(on_moved.verdict);
    if (on_moved.min && on_moved.min->root) {
      const auto& r = *on_moved.min->root;
      std::cout << " (min " << to_string(on_moved.min->verdict) << " at " << (r.exact ? to_string(r.lo) : "interior")
                << ")";
    }
    std::cout << "\n  signs at 0, 1/7, 1/2, 1:";
    for (int s : ex3::rational_nonvanishing_probe(field, w.element, probes)) std::cout << ' ' << s;
    std::cout << '\n';
  }

  auto right = ex3::sensitivity_witness(field, 2, ex3::Side::Right);
  std::cout << "-e_2 on [0, t]: " << ex3::to_string(ex3::classify(field, right.element, right.domain).verdict) << '\n';
}
