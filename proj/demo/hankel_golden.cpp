// Shifted Hankel determinants of [phi]_q: antiperiodic rows that obey Somos-4.

#include <iostream>

#include "qnum/analysis.hpp"

int main() {
  using namespace qnum;
  const auto a = target_coefficients("golden", 60);
  for (long k = 0; k <= 3; ++k) {
    const hankel_sequence h = hankel(a, k, 24);
    const periodicity_report p = detect_periodicity(h.values);
    std::cout << "shift " << k << ":";
    for (const auto& v : h.values) std::cout << " " << v;
    std::cout << "\n  " << to_string(p.kind) << " (" << p.period << "), Somos-4 "
              << (somos4_check(h.values).holds ? "holds" : "fails") << "\n";
  }
}
