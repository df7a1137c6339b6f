#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "ppgrowth/serialize.hpp"
#include "support.hpp"

using namespace ppgrowth;
using support::cyc;

TEST_CASE("language counts") {
  CHECK(count_language(named_spec("all"), 2) == 8);
  CHECK(count_language(AutomatonSpec{build_f2_lower()}, 1) == 3);
  CHECK(count_language(PredicateSpec{"empty", 2, [](const CyclicWord&) { return false; }}, 6) == 0);
  CHECK(count_language(named_spec("all"), 0) == 0);
  for (const auto& m : {build_f2_lower(), build_goldstein(Letter::negative(2), Letter::positive(1)), build_RnL(1)}) {
    for (std::size_t n = 1; n <= 10; ++n) {
      CHECK(count_language(AutomatonSpec{m}, n) == static_cast<unsigned long>(language(m, n).size()));
    }
  }
  for (std::size_t n = 1; n <= 7; ++n) CHECK(count_language(named_spec("all", 2), n) == oracle::cyclic_words(2, n).size());
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(check_budget(2, 40, 1000), Error);
  CHECK_NOTHROW(check_budget(2, 6, 1000));
  try {
    check_budget(3, 30);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("commutator growth") {
  GrowthSeries g = commutator_growth(2, {1, 2, 4, 6});
  CHECK(g.counts.at(1) == 0);
  std::size_t brute = 0;
  for (const auto& w : oracle::cyclic_words(2, 4)) brute += oracle::zero_abelianization(w, 2);
  CHECK(g.counts.at(4) == brute);
  std::vector<double> norm;
  GrowthSeries big = commutator_growth(2, {8, 10, 12, 14, 16});
  for (const auto& [n, c] : big.counts) norm.push_back(c.get_d() * static_cast<double>(n) / std::pow(3.0, static_cast<double>(n)));
  auto [lo, hi] = std::minmax_element(norm.begin(), norm.end());
  CHECK(*hi < 2 * *lo);
}

TEST_CASE("densities") {
  auto same = density_series(named_spec("goldstein"), named_spec("goldstein"), {3, 5});
  for (const auto& p : same) CHECK(p.value == 1);
  auto lb = density_series(AutomatonSpec{build_f2_lower()}, named_spec("pp2"), {8});
  CHECK(lb[0].value > 0);
  CHECK(lb[0].value < 1);
  auto comm = density_series(named_spec("commutator"), named_spec("all"), {8});
  CHECK(comm[0].value.get_d() < 0.2);
  CHECK(density_csv(comm).rfind("length,numerator,denominator,density\n8,", 0) == 0);
}

TEST_CASE("growth table") {
  auto rows = growth_table({2, 3, 7}, 10);
  CHECK(rows[0].pp_lower_bound.decimal(3, true) == "2.505");
  CHECK(rows[1].pp_lower_bound.decimal(3, true) == "4.024");
  CHECK(rows[0].all_rate == 3);
  CHECK(rows[2].positive_rate == 7);
  CHECK(rows[2].all_rate == 13);
  std::string md = table_markdown(rows, 4);
  CHECK(md.find("| F_2 | Θ(2^n) | Θ(2.505^n) | Θ(3^n) | 2.5050 |") != std::string::npos);
  CHECK(table_markdown(growth_table({2, 3}, 10), 4) == table_markdown(growth_table({2, 3}, 10), 4));
  CHECK_THROWS_AS(growth_table({1}), Error);
}

TEST_CASE("series csv") {
  GrowthSeries a = growth_series("g", named_spec("goldstein"), {1, 2});
  GrowthSeries b = growth_series("all", named_spec("all"), {2});
  CHECK(series_csv({a, b}) == "length,g,all\n1,4,\n2," + a.counts.at(2).get_str() + ",8\n");
}

TEST_CASE("sampling") {
  SampleReport r1 = sample_pp2(20, 5, 17);
  SampleReport r2 = sample_pp2(20, 5, 17);
  CHECK(r1.accepted == r2.accepted);
  CHECK(r1.accepted.size() == 5);
  CHECK(r1.fraction >= 0);
  CHECK(r1.fraction <= 1);
  CHECK_FALSE(r1.caveat.empty());
  for (const auto& w : r1.accepted) CHECK_FALSE(goldstein_check(w).empty());
  SampleReport r40 = sample_pp2(40, 1, 3);
  CHECK(r40.accepted.size() == 1);
  CHECK_THROWS_AS(sample_pp2(81, 1, 1), Error);
  CHECK(to_json(r1)["accepted"] == 5);
}
