// q-Fibonacci quotients F_{n+1}/F_n and how their expansions settle onto [phi]_q.

#include <iostream>

#include "qnum/qirrational.hpp"
#include "qnum/qrational.hpp"

int main() {
  using namespace qnum;
  const long order = 12;
  const series phi = q_irrational(cf_stream::periodic({}, {1}), order);

  integer a = 1, b = 1;
  for (int n = 1; n <= 12; ++n) {
    const qrational x = q_rational(fraction(b + a, b));
    const series s = taylor(x.value, order);
    long agree = -1;
    while (agree < order && s.coefficient(agree + 1) == phi.coefficient(agree + 1)) ++agree;
    std::cout << fraction(b + a, b).to_string() << "\t" << x.value.to_string() << "\n\tagrees through q^" << agree
              << "\n";
    a = b + a;
    std::swap(a, b);
  }
  std::cout << "[phi]_q = " << phi.to_string() << "\n";
}
