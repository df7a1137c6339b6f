#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ppgrowth/automorphism.hpp"
#include "ppgrowth/machines.hpp"
#include "ppgrowth/words.hpp"

namespace ppgrowth {

// Every occurrence of x is immediately preceded and followed by y.
struct CriterionPair {
  Letter x;
  Letter y;
  bool operator==(const CriterionPair&) const = default;
};

std::string format_pair(const CriterionPair& p);

// The 8 pairs with y not in {x, x^-1}: (B,a), (A,b), then the rest in
// lexicographic order.
const std::vector<CriterionPair>& canonical_pairs();

bool satisfies(const CyclicWord& w, const CriterionPair& p);

// Satisfied pairs in canonical order. With include_degenerate, the pairs
// (x,x) are appended after the canonical ones.
std::vector<CriterionPair> goldstein_check(const CyclicWord& w, bool include_degenerate = false);

// b -> ba and a <-> b.
ElementaryMove phi_move();
ElementaryMove gamma_move();

// Relabeling in the group generated by a -> A, b -> B and a <-> b taking
// x to B and y to a.
Automorphism normalizing_relabeling(const CriterionPair& p);
// All 8 relabelings, identity first.
std::vector<Automorphism> relabeling_group();

enum class SwitchOutcome { Positive, KeepsBa, SwitchesToAb, AllButOne, Fail };
std::string_view to_string(SwitchOutcome o);

struct SwitchResult {
  CyclicWord image;
  SwitchOutcome outcome;
  bool keeps_Ba = false;
  bool switches_to_Ab = false;
  Automorphism moves;  // relabeling followed by b -> ba
};

// Throws CriterionNotSatisfied unless w satisfies p.
SwitchResult switch_step(const CyclicWord& w, const CriterionPair& p);

// Some generator g has a negative occurrence and every other generator occurs
// only positively (or not at all). The witness sends x_i -> x_i g^K for every
// other generator, K the largest negative exponent of g. Returned only when the
// image is verified positive.
std::optional<Automorphism> all_but_one(const CyclicWord& w);
std::optional<Automorphism> all_but_one(const Word& w);
// Same with the distinguished generator fixed.
std::optional<Automorphism> all_but_one_for(const CyclicWord& w, int generator);

enum class Verdict { PP, NotPP, Undecided };
std::string_view to_string(Verdict v);

struct Decision {
  Verdict verdict = Verdict::Undecided;
  Automorphism witness{2};
  // For NotPP: the word reached after `certificate_step` switch steps, which
  // satisfies no criterion pair.
  std::optional<CyclicWord> certificate;
  std::size_t certificate_step = 0;
  std::size_t steps_used = 0;
  CyclicWord final_word{2};
};

std::size_t default_max_steps(std::size_t length);

// Throws RankMismatch for rank != 2.
Decision decide_pp2(const Word& w, std::optional<std::size_t> max_steps = std::nullopt);
Decision decide_pp2(const CyclicWord& w, std::optional<std::size_t> max_steps = std::nullopt);

// Throws NotMachineWord if the rank machine does not accept w and
// ScheduleFailed if the image is not positive.
Automorphism positivize_rank_word(int r, const CyclicWord& w);

// ---------------------------------------------------------------- tree

// Goldstein set for (B, a).
bool in_G(const CyclicWord& w);

// Path over {R, L}, applied from the left: R(S) = {w in G : phi(w) in S},
// L(S) = {w in G : gamma(phi(w)) in S}; the empty path is G.
bool tree_member(const std::string& path, const CyclicWord& w);
bool tree_survives(const CyclicWord& w, int n);

// ---------------------------------------------------------------- languages

struct AutomatonSpec {
  Automaton automaton;
};
struct ForbiddenSpec {
  ForbiddenRules rules;
};
struct TreeSpec {
  std::string path;
};
struct PredicateSpec {
  std::string name;
  int rank = 2;
  std::function<bool(const CyclicWord&)> predicate;
};
using LanguageSpec = std::variant<AutomatonSpec, ForbiddenSpec, TreeSpec, PredicateSpec>;

int spec_rank(const LanguageSpec& spec);
bool member(const LanguageSpec& spec, const CyclicWord& w);

// Named predicate languages: all, goldstein, rn:<n>, rnl:<n>, tree:<path>,
// pp2, commutator, f2-lower.
LanguageSpec named_spec(const std::string& name, int rank = 2);

// ---------------------------------------------------------------- encodings

// Largest n with w in the RnL language, if any.
std::optional<long> max_RnL_level(const CyclicWord& w);

// Throws NotInDomain unless w is in RnL and contains b.
CyclicWord encode_f(long n, const CyclicWord& w);
// Throws NotInDomain unless w is an image of encode_f.
CyclicWord decode_f(long n, const CyclicWord& w);

struct SignalDecoding {
  long n;
  CyclicWord word;
};

// Needs n maximal for w and at least one segment with two or more B's.
CyclicWord encode_signal(long n, const CyclicWord& w);
// Throws NoSignal when no marker is present.
SignalDecoding decode_signal(const CyclicWord& w);

}  // namespace ppgrowth
