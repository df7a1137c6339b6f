#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace ppgrowth;
using support::cyc;
using support::str;
using support::word;

namespace {

const Letter a = Letter::positive(1), A = Letter::negative(1), b = Letter::positive(2), B = Letter::negative(2);

bool has_pair(const std::vector<CriterionPair>& ps, CriterionPair p) {
  return std::find(ps.begin(), ps.end(), p) != ps.end();
}

}  // namespace

TEST_CASE("criterion pairs") {
  const auto& ps = canonical_pairs();
  REQUIRE(ps.size() == 8);
  CHECK(ps[0] == CriterionPair{B, a});
  CHECK(ps[1] == CriterionPair{A, b});
  for (const auto& p : ps) CHECK(p.x.generator() != p.y.generator());
}

TEST_CASE("Goldstein check") {
  CHECK(goldstein_check(cyc("abAB")).empty());
  CHECK(has_pair(goldstein_check(cyc("BaaBabAAAba")), {B, a}));
  CHECK(has_pair(goldstein_check(cyc("aaa")), {b, a}));
  CHECK_THROWS_AS(goldstein_check(cyc("abc", 3)), Error);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : oracle::cyclic_words(2, n)) {
      auto got = goldstein_check(cyc(w));
      for (const auto& p : canonical_pairs()) {
        bool expect = oracle::flanked(w, format_letter(p.x, 2)[0], format_letter(p.y, 2)[0]);
        CHECK(has_pair(got, p) == expect);
      }
    }
  }
}

TEST_CASE("relabelings") {
  auto group = relabeling_group();
  CHECK(group.size() == 8);
  CHECK(group.front().empty());
  std::set<std::string> images;
  for (const auto& g : group) images.insert(str(g.apply(word("ab"))) + "/" + str(g.apply(word("b"))));
  CHECK(images.size() == 8);
  for (const auto& p : canonical_pairs()) {
    Automorphism s = normalizing_relabeling(p);
    CHECK(str(s.apply(Word(2, {p.x}))) == "B");
    CHECK(str(s.apply(Word(2, {p.y}))) == "a");
  }
}

TEST_CASE("switch step") {
  SwitchResult r = switch_step(cyc("Baa"), {B, a});
  CHECK(r.image == cyc("Ba"));
  CHECK(r.keeps_Ba);
  SwitchResult p = switch_step(cyc("babAba"), {B, a});
  CHECK(p.image == cyc("baabbaa"));
  CHECK(p.outcome == SwitchOutcome::Positive);
  SwitchResult f = switch_step(cyc("BaBabAAAba"), {B, a});
  CHECK(f.outcome == SwitchOutcome::Fail);
  CHECK(goldstein_check(f.image).empty());
  CHECK_THROWS_AS(switch_step(cyc("abAB"), {B, a}), Error);
  // The move sequence reproduces the image.
  CHECK(f.moves.apply(cyc("BaBabAAAba")) == f.image);
}

TEST_CASE("all-but-one") {
  auto w1 = all_but_one(word("aB"));
  REQUIRE(w1);
  CHECK(str(w1->apply(word("aB"))) == "a");
  CHECK(str(all_but_one(cyc("aBaB"))->apply(cyc("aBaB"))) == "aa");
  auto w3 = all_but_one(cyc("cAc", 3));
  REQUIRE(w3);
  CHECK(w3->apply(cyc("cAc", 3)) == cyc("cca", 3));
  CHECK_FALSE(all_but_one(cyc("abAB")));
  CHECK_FALSE(all_but_one(cyc("aabb")));
}

TEST_CASE("decisions on the worked examples") {
  Decision d = decide_pp2(word("BaaBabAAAba"));
  CHECK(d.verdict == Verdict::PP);
  CHECK(d.witness.apply(cyc("BaaBabAAAba")).is_positive());
  // The greedy chain lands on the swap of the printed positive word.
  CHECK(Automorphism(2, {Swap{1, 2}}).apply(d.final_word) == cyc("abbaa"));

  Decision n = decide_pp2(word("abAB"));
  CHECK(n.verdict == Verdict::NotPP);
  CHECK(n.certificate_step == 0);
  REQUIRE(n.certificate);
  CHECK(goldstein_check(*n.certificate).empty());

  Decision s = decide_pp2(word("aB"));
  CHECK(s.verdict == Verdict::PP);
  CHECK(str(s.witness.apply(cyc("aB"))) == "a");

  CHECK(decide_pp2(word("BaBabAAAba")).verdict == Verdict::NotPP);
  CHECK(decide_pp2(word("AAA")).verdict == Verdict::PP);
  CHECK(decide_pp2(Word(2)).verdict == Verdict::PP);
  CHECK_THROWS_AS(decide_pp2(word("abc", 3)), Error);
}

TEST_CASE("decision limits") {
  Decision d = decide_pp2(word("BaaBabAAAba"), 0);
  CHECK(d.verdict == Verdict::Undecided);
  CHECK(default_max_steps(5) == 150);
}

TEST_CASE("decisions are sound and respect the commutator obstruction") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : oracle::cyclic_words(2, n)) {
      Decision d = decide_pp2(cyc(w));
      CHECK(d.verdict != Verdict::Undecided);
      if (d.verdict == Verdict::PP) {
        CHECK(oracle::positive(oracle::canon(str(d.witness.apply(cyc(w))))));
        CHECK_FALSE(oracle::zero_abelianization(w, 2));
      } else {
        REQUIRE(d.certificate);
        CHECK(goldstein_check(*d.certificate).empty());
      }
      // Goldstein's criterion is necessary.
      if (goldstein_check(cyc(w)).empty()) CHECK(d.verdict == Verdict::NotPP);
    }
  }
}

TEST_CASE("decisions are invariant under relabeling") {
  std::mt19937 rng(9);
  auto group = relabeling_group();
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& w : enumerate_cyclic(2, n)) {
      const auto& g = group[rng() % group.size()];
      CHECK(decide_pp2(w).verdict == decide_pp2(g.apply(w)).verdict);
    }
  }
}

TEST_CASE("rank positivization") {
  CHECK(positivize_rank_word(3, cyc("a", 3)).empty());
  CyclicWord w = cyc("aBc", 3);
  REQUIRE(accepts(build_rank_machine(3), w));
  Automorphism phi = positivize_rank_word(3, w);
  CHECK(phi.apply(w).is_positive());
  CHECK(positivize_rank_word(3, cyc("C", 3)).apply(cyc("C", 3)).is_positive());
  CHECK_THROWS_AS(positivize_rank_word(3, cyc("bcBC", 3)), Error);
  for (int r = 3; r <= 5; ++r) {
    Automaton m = build_rank_machine(r);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& v : language(m, n)) CHECK(positivize_rank_word(r, v).apply(v).is_positive());
    }
  }
}

TEST_CASE("tree membership") {
  CHECK(tree_member("R", cyc("Baa")));
  CHECK_FALSE(tree_member("R", cyc("Ba")));
  CHECK(tree_member("", cyc("abba")));
  CHECK_THROWS_AS(tree_member("X", cyc("a")), Error);
  CHECK_FALSE(tree_survives(cyc("abAB"), 0));
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : enumerate_cyclic(2, n)) {
      CHECK(tree_member("R", w) == (in_G(w) && in_G(Automorphism(2, {phi_move()}).apply(w))));
      if (tree_member("RR", w)) CHECK(tree_survives(w, 2));
      for (int k = 0; k <= 3; ++k) CHECK(tree_member(std::string(k, 'R'), w) == oracle::in_Rn(str(w), k));
      CHECK(tree_member("RL", w) == oracle::in_RnL(str(w), 1));
    }
  }
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& w : language(build_f2_lower(), n)) CHECK(tree_survives(w, 5));
}

TEST_CASE("language specs") {
  CHECK(member(named_spec("all"), cyc("abAB")));
  CHECK(member(named_spec("commutator"), cyc("abAB")));
  CHECK_FALSE(member(named_spec("commutator"), cyc("ab")));
  CHECK(member(named_spec("rn:1"), cyc("Baa")));
  CHECK_FALSE(member(named_spec("rn:1"), cyc("Ba")));
  CHECK(member(named_spec("pp2"), cyc("aB")));
  CHECK(member(named_spec("tree:R"), cyc("Baa")));
  CHECK(member(named_spec("f2-lower"), cyc("ab")));
  CHECK(spec_rank(named_spec("all", 3)) == 3);
  CHECK_THROWS_AS(named_spec("bogus"), Error);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : enumerate_cyclic(2, n)) {
      CHECK(member(ForbiddenSpec{rules_RnL(1)}, w) == accepts(build_RnL(1), w));
      CHECK(member(named_spec("rnl:2"), w) == oracle::in_RnL(str(w), 2));
    }
  }
}

TEST_CASE("encodings on the worked example") {
  CyclicWord w = cyc("baBaBab");
  CHECK(encode_f(0, w) == cyc("bbAAAbb"));
  CHECK(decode_f(0, cyc("bbAAAbb")) == w);
  CyclicWord s = encode_signal(0, w);
  CHECK(s == cyc("bbAbAAAbAbb"));
  SignalDecoding d = decode_signal(s);
  CHECK(d.n == 0);
  CHECK(d.word == w);
  CHECK(encode_f(1, cyc("aabab")) == cyc("aabab"));
  CHECK_THROWS_AS(encode_f(0, cyc("abAB")), Error);
  CHECK_THROWS_AS(decode_signal(cyc("ab")), Error);
}

TEST_CASE("encodings are injective and land in the limit language") {
  Automaton lower = build_f2_lower();
  for (long n = 0; n <= 2; ++n) {
    for (std::size_t len = 1; len <= 10; ++len) {
      std::map<CyclicWord, CyclicWord> seen;
      for (const auto& w : enumerate_cyclic(2, len)) {
        if (!oracle::in_RnL(str(w), static_cast<int>(n)) || std::find(w.begin(), w.end(), b) == w.end()) continue;
        CyclicWord img = encode_f(n, w);
        CHECK(img.size() == w.size());
        CHECK(accepts(lower, img));
        CHECK(decode_f(n, img) == w);
        auto [it, fresh] = seen.emplace(img, w);
        CHECK(fresh);
      }
    }
  }
}
