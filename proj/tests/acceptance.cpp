// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "verify.hpp"

using namespace qnum;

namespace {

struct outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (pass) detail = what;
    pass = false;
  }
  void absorb(const suite_result& r) {
    require(r.ok() && r.passed > 0, r.name + ": " + std::to_string(r.failed) + " failed" +
                                        (r.failures.empty() ? "" : " (" + r.failures.front() + ")"));
  }
};

const std::vector<fixture>& fixtures() {
  static const std::vector<fixture> fs = load_fixtures();
  return fs;
}

const fixture& named(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw error(errc::invalid_arguments, "no fixture named '" + name + "'");
}

void require_fixture(outcome& o, const std::string& name) {
  const auto r = check_fixture(named(name));
  o.require(r.pass, name + ": " + r.detail);
}

suite_result suite(const std::string& name, verify_limits l) { return run_suite(name, l); }

outcome rational_fixtures() {
  outcome o;
  for (const char* x : {"1/2", "5/2", "5/3", "1", "2", "3/2", "8/5", "13/8", "21/13", "12/5", "29/12", "70/29"})
    require_fixture(o, std::string("q_rational ") + x);
  return o;
}

outcome cross_method() {
  outcome o;
  long checked = 0;
  for (long m = 1; m < 120; ++m)
    for (long n = -(120 - m); n <= 120 - m; ++n) {
      if (!detail::coprime(n, m)) continue;
      const fraction x(n, m);
      const rational_function ref = q_rational(x, qmethod::negcf).value;
      for (qmethod method : {qmethod::regcf, qmethod::recurrence, qmethod::farey})
        o.require(q_rational(x, method).value == ref, x.to_string() + ": " + to_string(method) + " differs");
      ++checked;
    }
  o.require(checked > 8000, "too few fractions enumerated");
  return o;
}

outcome golden_series() {
  outcome o;
  require_fixture(o, "golden ratio series");
  const series s = q_irrational(cf_stream::periodic({}, {1}), 16);
  o.require(s.coefficient(15) == -12735 && s.coefficient(16) == 30372, "last two coefficients");
  return o;
}

outcome pi_series() {
  outcome o;
  o.require(read_cf_file(data_path("pi.cf"), 60).size() == 60, "pi.cf holds fewer than 60 terms");
  require_fixture(o, "pi series");
  return o;
}

outcome closed_forms() {
  outcome o;
  require_fixture(o, "golden ratio surd");
  require_fixture(o, "silver ratio surd");
  const surd g = metallic(1);
  const auto [rat, irr] = g.residual(polynomial{0, 1}, polynomial{1, -1, -1}, polynomial{-1});
  o.require(rat.is_zero() && irr.is_zero(), "golden surd does not solve qX^2 - (q^2+q-1)X - 1 = 0");
  return o;
}

outcome radii() {
  outcome o;
  o.require(std::abs(radius(metallic(1)).value - 0.381966) < 1e-6, "R(phi)");
  verify_limits l;
  l.max_den = 40;
  o.absorb(suite("radius", l));
  for (long m = 2; m <= 40; ++m)
    for (long n = 1; n <= 3 * m; ++n) {
      if (!detail::coprime(n, m)) continue;
      const polynomial den = q_rational(fraction(n, m)).den();
      const root_result roots = polynomial_roots(detail::squarefree_part(den));
      o.require(roots.converged, std::to_string(n) + "/" + std::to_string(m) + " root finder did not converge");
      double nearest = INFINITY;
      for (const auto& z : roots.roots) nearest = std::min(nearest, std::abs(z));
      o.require(nearest >= golden_radius - 1e-9, std::to_string(n) + "/" + std::to_string(m) + " denominator root");
    }
  return o;
}

outcome positivity() {
  outcome o;
  verify_limits l;
  l.max_den = 40;
  l.count = 10000;
  l.depth = 12;
  o.absorb(suite("positivity", l));
  return o;
}

outcome unimodality() {
  outcome o;
  verify_limits l;
  l.max_den = 60;
  o.absorb(suite("unimodal", l));
  return o;
}

outcome traces() {
  outcome o;
  verify_limits l;
  l.count = 1000;
  o.absorb(suite("trace", l));
  require_fixture(o, "B_q");
  require_fixture(o, "trace B_q");
  require_fixture(o, "decompose B");
  return o;
}

outcome snakes() {
  outcome o;
  verify_limits l;
  l.max_den = 40;
  o.absorb(suite("snake", l));
  require_fixture(o, "snake 5/2");
  return o;
}

outcome doubling() {
  outcome o;
  verify_limits l;
  l.order = 16;
  o.absorb(suite("stabilize", l));
  for (const char* x : {"0", "1", "2", "inf"}) require_fixture(o, std::string("left_q_rational ") + x);
  return o;
}

outcome hankel_somos() {
  outcome o;
  o.absorb(suite("hankel", {}));
  for (int k = 0; k <= 3; ++k) require_fixture(o, "golden Hankel shift " + std::to_string(k));
  require_fixture(o, "Motzkin Hankel shift 0");
  require_fixture(o, "Motzkin Hankel shift 1");
  const auto a = target_coefficients("golden", 100);
  for (long k = 0; k <= 2; ++k) {
    const auto h = hankel(a, k, 40);
    o.require(h.values.size() >= 40 && somos4_check(h.values).holds, "Somos-4 on shift " + std::to_string(k));
  }
  return o;
}

outcome vieta() {
  outcome o;
  for (cubic_equation e : {cubic_equation::heptagon, cubic_equation::nonagon}) {
    const auto r = vieta_check(e, 30);
    o.require(r.product_residual == 0 && r.pair_residual == 0, to_string(e) + " residuals");
  }
  return o;
}

outcome catalan_motzkin() {
  outcome o;
  const auto c = catalan_motzkin_check(50);
  o.require(c.catalan_residual == 0, "Catalan residual " + c.catalan_residual.str());
  o.require(c.motzkin_residual == 0, "Motzkin residual " + c.motzkin_residual.str());
  require_fixture(o, "Catalan numbers");
  require_fixture(o, "Motzkin numbers");
  return o;
}

outcome property_suites() {
  outcome o;
  verify_limits l = verify_ceilings;
  l.seed = 1;
  for (const char* name : {"stabilize", "methods", "symmetry"}) o.absorb(suite(name, l));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<outcome()>>> criteria{
      {"q-rational fixtures", rational_fixtures},
      {"cross-method equality, n+m <= 120", cross_method},
      {"golden ratio series through q^16", golden_series},
      {"pi series through q^49", pi_series},
      {"metallic closed forms", closed_forms},
      {"radius of convergence", radii},
      {"positivity and order", positivity},
      {"unimodality", unimodality},
      {"trace palindromicity", traces},
      {"snake graph path counts", snakes},
      {"left and right limits", doubling},
      {"Hankel determinants and Somos-4", hankel_somos},
      {"Vieta identities through q^30", vieta},
      {"Catalan and Motzkin equations through q^50", catalan_motzkin},
      {"property suites at ceilings", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s %2zu %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.pass ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
