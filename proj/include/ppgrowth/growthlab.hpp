#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ppgrowth/potpos.hpp"
#include "ppgrowth/spectral.hpp"

namespace ppgrowth {

// Upper limit on (2r-1)^length for enumeration-backed counts. Read from
// PPGROWTH_BUDGET when set.
inline constexpr std::uint64_t kDefaultBudget = 200'000'000ULL;
std::uint64_t enumeration_budget();
// Throws BudgetExceeded when enumerating length-n words of rank r would exceed
// the budget.
void check_budget(int rank, std::size_t length, std::uint64_t budget = enumeration_budget());

// Calls fn on every cyclic word of the length, sharded across threads by first
// letter. fn must be thread safe.
void parallel_for_each_cyclic(int rank, std::size_t length, const std::function<void(const CyclicWord&)>& fn);

mpz_class count_language(const LanguageSpec& spec, std::size_t length);

struct GrowthSeries {
  std::string label;
  std::map<std::size_t, mpz_class> counts;
};

GrowthSeries growth_series(const std::string& label, const LanguageSpec& spec, const std::vector<std::size_t>& lengths);
GrowthSeries commutator_growth(int rank, const std::vector<std::size_t>& lengths);

struct DensityPoint {
  std::size_t length;
  mpz_class numerator;    // count of the sub language
  mpz_class denominator;  // count of the super language
  mpq_class value;        // (numerator + 1) / (denominator + 1)
};

std::vector<DensityPoint> density_series(const LanguageSpec& sub, const LanguageSpec& super,
                                         const std::vector<std::size_t>& lengths);

struct TableRow {
  int rank;
  int positive_rate;
  RootApproximation pp_lower_bound;
  int all_rate;
};

// Rank 2 uses the F_2 lower-bound machine, higher ranks the rank machine.
Automaton lower_bound_machine(int rank);
std::vector<TableRow> growth_table(const std::vector<int>& ranks, int digits = kDefaultDigits);

struct SampleReport {
  std::size_t length = 0;
  std::size_t requested = 0;
  std::size_t draws = 0;
  std::vector<CyclicWord> accepted;  // decided PP
  std::size_t in_lower_language = 0;
  double fraction = 0.0;  // in_lower_language / accepted.size(), 0 when none
  std::string caveat;
};

inline constexpr std::size_t kMaxSampleLength = 80;

// Uniform closed paths of the Goldstein machine filtered by decide_pp2; stops
// after `count` accepted words or `max_draws` draws.
SampleReport sample_pp2(std::size_t length, std::size_t count, std::uint64_t seed,
                        std::size_t max_draws = 1'000'000);

// ---------------------------------------------------------------- reports

std::string series_csv(const std::vector<GrowthSeries>& series);
std::string density_csv(const std::vector<DensityPoint>& points);
std::string table_markdown(const std::vector<TableRow>& rows, int digits);

}  // namespace ppgrowth
