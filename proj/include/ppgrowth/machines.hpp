#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ppgrowth/spectral.hpp"
#include "ppgrowth/words.hpp"

namespace ppgrowth {

struct Node {
  int id;
  Letter label;
  bool operator==(const Node&) const = default;
};

struct Edge {
  int src;
  int dst;
  auto operator<=>(const Edge&) const = default;
};

// Node-labeled digraph. Nodes are kept sorted by id, edges sorted and unique.
class Automaton {
 public:
  Automaton() = default;
  Automaton(int rank, std::vector<Node> nodes, std::vector<Edge> edges);

  int rank() const { return rank_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Position of a node id in nodes(); throws DanglingEdge when absent.
  std::size_t index_of(int id) const;
  Letter label_at(std::size_t index) const { return nodes_[index].label; }
  const std::vector<std::size_t>& successors(std::size_t index) const { return succ_[index]; }

  bool operator==(const Automaton& other) const { return rank_ == other.rank_ && nodes_ == other.nodes_ && edges_ == other.edges_; }

 private:
  int rank_ = 2;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> succ_;
};

// Counterexamples carried by failed checks. Paths are node ids.
struct InverseEdgeWitness {
  Edge edge;
};
struct UnreachableWitness {
  int from;
  int to;
};
struct PeriodWitness {
  long period;
};
struct DuplicatePathsWitness {
  std::vector<int> first;
  std::vector<int> second;
};
using Witness = std::variant<InverseEdgeWitness, UnreachableWitness, PeriodWitness, DuplicatePathsWitness>;

struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;
  explicit operator bool() const { return holds; }
};

std::string describe(const Witness& w);

CheckResult check_reduced(const Automaton& a);
CheckResult check_strongly_connected(const Automaton& a);
CheckResult check_mixing(const Automaton& a);
// Throws NotMixing if a is not mixing.
CheckResult check_one_to_constant(const Automaton& a);

struct PropertyReport {
  bool reduced = false;
  bool strongly_connected = false;
  bool mixing = false;
  bool one_to_constant = false;  // only evaluated for mixing automata
  std::vector<Witness> witnesses;
};
PropertyReport check_properties(const Automaton& a);

IntMatrix adjacency_matrix(const Automaton& a);

// trace(A^n).
mpz_class count_closed_paths(const Automaton& a, unsigned long n);

// Distinct cyclic images of closed paths of length n. Throws NotReduced.
std::set<CyclicWord> language(const Automaton& a, std::size_t n);

// Whether some closed path spells the word.
bool accepts(const Automaton& a, const CyclicWord& w);

// ---------------------------------------------------------------- bounded-run rules

// Occurrences of open run^k close, read cyclically. A plain family forbids
// k in [lo, hi]. An anchored family requires every maximal run of `run` to be
// opened by `open` and to have length at most hi; words made only of `run`
// letters are rejected.
struct RunFamily {
  Letter open;
  Letter run;
  Letter close;
  long lo = 0;
  long hi = 0;
  bool anchored = false;
  bool operator==(const RunFamily&) const = default;
};

struct ForbiddenRules {
  int rank = 2;
  std::vector<std::pair<Letter, Letter>> pairs;
  std::vector<RunFamily> families;

  bool accepts(const CyclicWord& w) const;
};

// Deterministic automaton whose closed paths spell exactly the accepted cyclic
// words. Nodes not on any cycle are dropped.
Automaton compile_rules(const ForbiddenRules& rules);

ForbiddenRules rules_Rn(long n);
ForbiddenRules rules_RnL(long n);

// ---------------------------------------------------------------- builders

// Requires y not in {x, x^-1}; throws InvalidCriterionPair.
Automaton build_goldstein(Letter x, Letter y);
Automaton build_f2_lower();
// Throws RankTooSmall for r < 3.
Automaton build_rank_machine(int r);
// Rank machine with the zeta-zeta block replaced by a block code ("L+I", ...).
Automaton build_rank_machine_block_variant(int r, const std::string& zeta_zeta);
Automaton build_Rn(long n);
Automaton build_RnL(long n);

// Builder names: f2-lower, goldstein[:XY], rank:<r>, rn:<n>, rnl:<n>.
Automaton build_named(const std::string& name);

// ---------------------------------------------------------------- text format

Automaton read_automaton(const std::string& text);
std::string write_automaton(const Automaton& a);

// ---------------------------------------------------------------- sampling

// Uniform closed paths of a fixed length, by exact path counting.
class ClosedPathSampler {
 public:
  ClosedPathSampler(const Automaton& a, std::size_t length);

  const mpz_class& total() const { return total_; }
  // Node indices v_0 .. v_{n-1}; there is an edge v_{n-1} -> v_0.
  std::vector<std::size_t> sample_path(gmp_randclass& rng);
  CyclicWord sample_word(gmp_randclass& rng);

 private:
  const std::vector<std::vector<mpz_class>>& returns_to(std::size_t start);

  const Automaton* automaton_;
  std::size_t length_;
  IntMatrix adj_;
  std::vector<mpz_class> diagonal_;
  mpz_class total_;
  std::vector<std::vector<std::vector<mpz_class>>> cache_;
};

}  // namespace ppgrowth
