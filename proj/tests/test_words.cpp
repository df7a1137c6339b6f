#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace ppgrowth;
using support::cyc;
using support::str;
using support::word;

TEST_CASE("free reduction") {
  CHECK(str(word("aA")) == "");
  CHECK(str(word("abBA")) == "");
  CHECK(str(word("aBba")) == "aa");
  CHECK_THROWS_AS(parse_word("c", 2), Error);
  try {
    parse_word("abc", 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidLetter);
  }
}

TEST_CASE("reduction matches the string oracle") {
  std::mt19937 rng(7);
  const std::string al = oracle::alphabet(3);
  for (int t = 0; t < 500; ++t) {
    std::string raw;
    int n = static_cast<int>(rng() % 16);
    for (int i = 0; i < n; ++i) raw.push_back(al[rng() % al.size()]);
    Word w = word(raw, 3);
    CHECK(str(w) == oracle::reduce(raw));
    CHECK(str(Word(3, w.letters())) == str(w));
    CHECK((w * w.inverse()).empty());
    CHECK(str(CyclicWord(w)) == oracle::canon(raw));
  }
}

TEST_CASE("cyclic reduction and conjugator") {
  auto check = [](const std::string& in, const std::string& core, const std::string& conj) {
    CyclicReduction r = cyclic_reduce(word(in));
    CHECK(str(r.core) == core);
    CHECK(str(r.conjugator) == conj);
  };
  check("Aba", "b", "A");
  check("abA", "b", "a");
  check("ab", "ab", "");

  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::string raw;
    for (int i = 0, n = static_cast<int>(rng() % 12); i < n; ++i) raw.push_back("aAbB"[rng() % 4]);
    Word w = word(raw);
    CyclicReduction r = cyclic_reduce(w);
    CHECK(r.conjugator * r.core.linear() * r.conjugator.inverse() == w);
    CHECK(r.core.linear().is_cyclically_reduced());
    CHECK(CyclicWord(r.core.linear()) == r.core);
  }
}

TEST_CASE("canonical rotation uses a < A < b < B") {
  CHECK(str(cyc("ba")) == "ab");
  CHECK(str(cyc("Ab")) == "Ab");
  CHECK(str(cyc("bA")) == "Ab");
  CHECK(str(cyc("BaaBabAAAba")) == oracle::canon("BaaBabAAAba"));
  CHECK(cyc("abab") == cyc("baba"));
}

TEST_CASE("cyclic subwords use periodic semantics") {
  CHECK(contains_cyclic_subword(cyc("aBa"), word("aa")));
  CHECK(contains_cyclic_subword(cyc("ab"), word("ba")));
  CHECK_FALSE(contains_cyclic_subword(cyc("Baa"), word("BB")));
  CHECK(contains_cyclic_subword(cyc("a"), word("aaa")));

  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : enumerate_cyclic(2, n)) {
      for (std::size_t m = 1; m <= 3; ++m) {
        for (const auto& p : enumerate_reduced(2, m)) {
          CHECK(contains_cyclic_subword(w, p) == oracle::contains_cyclic(str(w), str(p)));
        }
      }
    }
  }
}

TEST_CASE("syllables") {
  auto sy = syllables(word("aaBBBa"));
  REQUIRE(sy.size() == 3);
  CHECK(sy[0] == Syllable{1, 2});
  CHECK(sy[1] == Syllable{2, -3});
  CHECK(sy[2] == Syllable{1, 1});
  auto cs = syllables(cyc("aaBBBa"));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].exponent + cs[1].exponent == 0);
  CHECK(syllables(word("b")) == std::vector<Syllable>{{2, 1}});
}

TEST_CASE("abelianization") {
  CHECK(abelianize(word("abAB")) == std::vector<long long>{0, 0});
  CHECK(abelianize(word("aab")) == std::vector<long long>{2, 1});
  CHECK(abelianize(word("BaB")) == std::vector<long long>{1, -2});
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_reduced(2, 0).size() == 1);
  CHECK(enumerate_reduced(2, 1).size() == 4);
  CHECK(enumerate_reduced(2, 2).size() == 12);
  for (int r = 1; r <= 3; ++r) {
    for (std::size_t n = 1; n <= 7; ++n) {
      std::size_t expect = 2 * r;
      for (std::size_t i = 1; i < n; ++i) expect *= 2 * r - 1;
      CHECK(enumerate_reduced(r, n).size() == expect);
    }
  }
  CHECK(enumerate_cyclic(2, 1).size() == 4);
  CHECK(enumerate_cyclic(2, 2).size() == 8);
  CHECK(enumerate_cyclic(1, 2).size() == 2);
}

TEST_CASE("cyclic enumeration equals brute force") {
  for (int r = 1; r <= 3; ++r) {
    for (std::size_t n = 1; n <= (r == 3 ? 4u : 7u); ++n) {
      std::set<std::string> got;
      for (const auto& w : enumerate_cyclic(r, n)) CHECK(got.insert(str(w)).second);
      CHECK(got == oracle::cyclic_words(r, n));
    }
  }
}

TEST_CASE("sharded enumeration covers everything once") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<std::string> all;
    std::size_t total = 0;
    for (int s = 0; s < 4; ++s) {
      for_each_cyclic(2, n, [&](const CyclicWord& w) {
        all.insert(str(w));
        ++total;
      }, Letter::from_order_key(s));
    }
    CHECK(total == all.size());
    CHECK(all.size() == enumerate_cyclic(2, n).size());
  }
}

TEST_CASE("text forms") {
  CHECK(str(word("x1 X2 x3", 3)) == "aBc");
  Word big = parse_word("x1 x9 X9 X8", 9);
  CHECK(format_word(big) == "x1 X8");
  CHECK(str(word("")) == "");
  CHECK(parse_word("x10", 12)[0] == Letter::positive(10));
  CHECK_THROWS_AS(parse_word("x0", 3), Error);
  CHECK_THROWS_AS(parse_word("a?", 2), Error);
}

TEST_CASE("positivity") {
  CHECK(Word(2).is_positive());
  CHECK(cyc("aab").is_positive());
  CHECK_FALSE(cyc("aB").is_positive());
}
