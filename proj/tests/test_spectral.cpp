#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace ppgrowth;

namespace {

std::vector<Automaton> builtins() {
  std::vector<Automaton> out{build_f2_lower(), build_goldstein(Letter::negative(2), Letter::positive(1))};
  for (int r = 3; r <= 5; ++r) out.push_back(build_rank_machine(r));
  for (int n = 0; n <= 2; ++n) {
    out.push_back(build_Rn(n));
    out.push_back(build_RnL(n));
  }
  return out;
}

}  // namespace

TEST_CASE("charpoly small cases") {
  CHECK(charpoly(IntMatrix{{2}}) == IntPolynomial{-2, 1});
  IntMatrix gold{{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 0}};
  CHECK(charpoly(gold) == IntPolynomial{0, 3, 0, -3, 1});
  CHECK(to_string(charpoly(gold)) == "x^4 - 3x^3 + 3x");
  // (x - 1)(x^4 - 3x^3 + x^2 + x - 1)
  IntPolynomial expect = IntPolynomial{-1, 1} * IntPolynomial{-1, 1, 1, -3, 1};
  CHECK(charpoly(adjacency_matrix(build_f2_lower())) == expect);
  CHECK(charpoly(IntMatrix::identity(3)) == IntPolynomial{-1, 3, -3, 1});
}

TEST_CASE("charpoly agrees with Bareiss determinants") {
  for (const auto& a : builtins()) {
    IntMatrix m = adjacency_matrix(a);
    IntPolynomial p = charpoly(m);
    REQUIRE(p.degree() == static_cast<int>(m.size()));
    CHECK(p.leading() == 1);
    CHECK(-p.coefficient(m.size() - 1) == m.trace());
    for (long t = -2; t <= 2; ++t) CHECK(p(mpz_class(t)) == oracle::charpoly_at(support::dense(m), t));
  }
}

TEST_CASE("dominant roots") {
  RootApproximation lb = dominant_root(IntPolynomial{-1, 1, 1, -3, 1}, 20);
  CHECK(std::abs(lb.to_double() - 2.50506841362147) < 1e-10);
  CHECK(lb.lo <= lb.value);
  CHECK(lb.value <= lb.hi);
  RootApproximation g = dominant_root(IntPolynomial{3, 0, -3, 1});
  CHECK(std::abs(g.to_double() - 2.53209) < 1e-5);
  RootApproximation phi = dominant_root(IntPolynomial{-1, -1, 1}, 30);
  CHECK(phi.decimal(20) == "1.61803398874989484820");
  CHECK_THROWS_AS(dominant_root(IntPolynomial{1, 0, 1}), Error);
}

TEST_CASE("roots bracket exactly one root and refine consistently") {
  for (const auto& a : builtins()) {
    IntPolynomial p = charpoly(adjacency_matrix(a));
    RootApproximation coarse = dominant_root(p, 6);
    RootApproximation fine = dominant_root(p, 25);
    CHECK(count_real_roots(p, coarse.lo, coarse.hi) <= 1);
    CHECK(coarse.lo <= fine.value);
    CHECK(fine.value <= coarse.hi);
    CHECK(abs(fine.value - coarse.value) <= coarse.radius);
    CHECK(p(fine.lo) * p(fine.hi) <= 0);
    // Nothing larger.
    CHECK(count_real_roots(p, fine.hi, mpq_class(1000)) == 0);
  }
}

TEST_CASE("power iteration oracle") {
  CHECK(power_iteration_estimate(IntMatrix::identity(3), 10) == doctest::Approx(1.0));
  CHECK(power_iteration_estimate(IntMatrix{{2}}, 10) == doctest::Approx(2.0));
  CHECK_THROWS_AS(power_iteration_estimate(IntMatrix{{0, 1}, {1, 0}}, 10), Error);
  for (const auto& a : builtins()) {
    IntMatrix m = adjacency_matrix(a);
    if (!is_primitive(m)) continue;
    double est = power_iteration_estimate(m, 10000);
    double root = dominant_root(charpoly(m)).to_double();
    CHECK(std::abs(est - root) < 1e-6);
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(IntMatrix{{1}}));
  CHECK_FALSE(is_primitive(IntMatrix{{0, 1}, {1, 0}}));
  CHECK_FALSE(is_primitive(IntMatrix{{1, 0}, {0, 1}}));
  CHECK(is_primitive(IntMatrix{{0, 1}, {1, 1}}));
}

TEST_CASE("matrix algebra") {
  IntMatrix a{{1, 1}, {1, 0}};
  CHECK(a.pow(10)(0, 0) == 89);
  CHECK(a.pow(0) == IntMatrix::identity(2));
  CHECK((a + a)(0, 0) == 2);
  IntMatrix big = a.pow(100);
  CHECK(big(0, 1).get_str() == "354224848179261915075");
}
