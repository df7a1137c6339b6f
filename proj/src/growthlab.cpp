#include "ppgrowth/growthlab.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "ppgrowth/error.hpp"

namespace ppgrowth {

std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("PPGROWTH_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultBudget;
}

void check_budget(int rank, std::size_t length, std::uint64_t budget) {
  mpz_class cost;
  mpz_ui_pow_ui(cost.get_mpz_t(), static_cast<unsigned long>(2 * rank - 1), length);
  if (cost > mpz_class(std::to_string(budget))) {
    throw Error(ErrorKind::BudgetExceeded, "enumerating length " + std::to_string(length) + " at rank " +
                                               std::to_string(rank) + " costs " + cost.get_str() +
                                               " > budget " + std::to_string(budget));
  }
}

void parallel_for_each_cyclic(int rank, std::size_t length, const std::function<void(const CyclicWord&)>& fn) {
  if (length == 0) {
    for_each_cyclic(rank, 0, fn);
    return;
  }
  const int shards = 2 * rank;
  const int threads = std::max(1, std::min(shards, static_cast<int>(std::thread::hardware_concurrency())));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (int s = next++; s < shards; s = next++) {
      try {
        for_each_cyclic(rank, length, fn, Letter::from_order_key(s));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

mpz_class count_language(const LanguageSpec& spec, std::size_t length) {
  if (length == 0) return 0;
  if (const auto* a = std::get_if<AutomatonSpec>(&spec)) {
    if (count_closed_paths(a->automaton, length) <= mpz_class(std::to_string(enumeration_budget()))) {
      return static_cast<unsigned long>(language(a->automaton, length).size());
    }
  }
  const int rank = spec_rank(spec);
  check_budget(rank, length);
  std::atomic<unsigned long long> count{0};
  parallel_for_each_cyclic(rank, length, [&](const CyclicWord& w) {
    if (member(spec, w)) ++count;
  });
  return static_cast<unsigned long>(count.load());
}

GrowthSeries growth_series(const std::string& label, const LanguageSpec& spec, const std::vector<std::size_t>& lengths) {
  GrowthSeries g{label, {}};
  for (std::size_t n : lengths) g.counts[n] = count_language(spec, n);
  return g;
}

GrowthSeries commutator_growth(int rank, const std::vector<std::size_t>& lengths) {
  return growth_series("commutator", named_spec("commutator", rank), lengths);
}

std::vector<DensityPoint> density_series(const LanguageSpec& sub, const LanguageSpec& super,
                                         const std::vector<std::size_t>& lengths) {
  std::vector<DensityPoint> out;
  for (std::size_t n : lengths) {
    mpz_class num = count_language(sub, n);
    mpz_class den = count_language(super, n);
    mpq_class v(num + 1, den + 1);
    v.canonicalize();
    out.push_back({n, num, den, v});
  }
  return out;
}

Automaton lower_bound_machine(int rank) { return rank == 2 ? build_f2_lower() : build_rank_machine(rank); }

std::vector<TableRow> growth_table(const std::vector<int>& ranks, int digits) {
  std::vector<TableRow> rows;
  for (int r : ranks) {
    if (r < 2) throw Error(ErrorKind::RankTooSmall, "table ranks start at 2");
    IntPolynomial p = charpoly(adjacency_matrix(lower_bound_machine(r)));
    rows.push_back({r, r, dominant_root(p, digits), 2 * r - 1});
  }
  return rows;
}

SampleReport sample_pp2(std::size_t length, std::size_t count, std::uint64_t seed, std::size_t max_draws) {
  if (length == 0 || length > kMaxSampleLength) {
    throw Error(ErrorKind::InvalidArgument, "sample length must be in 1.." + std::to_string(kMaxSampleLength));
  }
  SampleReport rep;
  rep.length = length;
  rep.requested = count;
  rep.caveat =
      "closed paths of the Goldstein machine are drawn uniformly, so accepted words are weighted by their "
      "path multiplicity rather than uniform over potentially positive words; short lengths only";
  Automaton gold = build_goldstein(Letter::negative(2), Letter::positive(1));
  Automaton lower = build_f2_lower();
  ClosedPathSampler sampler(gold, length);
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(mpz_class(std::to_string(seed)));
  while (rep.accepted.size() < count && rep.draws < max_draws) {
    CyclicWord w = sampler.sample_word(rng);
    ++rep.draws;
    if (decide_pp2(w).verdict != Verdict::PP) continue;
    rep.accepted.push_back(w);
    if (accepts(lower, w)) ++rep.in_lower_language;
  }
  if (!rep.accepted.empty()) {
    rep.fraction = static_cast<double>(rep.in_lower_language) / static_cast<double>(rep.accepted.size());
  }
  return rep;
}

std::string series_csv(const std::vector<GrowthSeries>& series) {
  std::ostringstream out;
  out << "length";
  for (const auto& s : series) out << "," << s.label;
  out << "\n";
  std::set<std::size_t> lengths;
  for (const auto& s : series)
    for (const auto& [n, c] : s.counts) lengths.insert(n);
  for (std::size_t n : lengths) {
    out << n;
    for (const auto& s : series) {
      auto it = s.counts.find(n);
      out << "," << (it == s.counts.end() ? std::string() : it->second.get_str());
    }
    out << "\n";
  }
  return out.str();
}

std::string density_csv(const std::vector<DensityPoint>& points) {
  std::ostringstream out;
  out << "length,numerator,denominator,density\n";
  for (const auto& p : points) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", p.value.get_d());
    out << p.length << "," << p.numerator.get_str() << "," << p.denominator.get_str() << "," << buf << "\n";
  }
  return out.str();
}

std::string table_markdown(const std::vector<TableRow>& rows, int digits) {
  std::ostringstream out;
  out << "| | pos. | p. pos. | all | p. pos. root (" << digits << " places, truncated) |\n|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    const char* cls = r.rank == 2 ? "Θ" : "Ω";
    out << "| F_" << r.rank << " | Θ(" << r.positive_rate << "^n) | " << cls << "(" << r.pp_lower_bound.decimal(3, true)
        << "^n) | Θ(" << r.all_rate << "^n) | " << r.pp_lower_bound.decimal(digits) << " |\n";
  }
  return out.str();
}

}  // namespace ppgrowth
