#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppgrowth {

// A generator x_g or its inverse. Letters are totally ordered by
// a < A < b < B < c < ..., which is the order used for canonical rotations.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign) : value_(sign < 0 ? -generator : generator) {}

  static constexpr Letter positive(int generator) { return Letter(generator, 1); }
  static constexpr Letter negative(int generator) { return Letter(generator, -1); }
  static constexpr Letter from_code(int code) {
    Letter l;
    l.value_ = code;
    return l;
  }

  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr bool is_positive() const { return value_ > 0; }
  constexpr Letter inverse() const { return from_code(-value_); }
  constexpr bool is_inverse_of(Letter other) const { return value_ == -other.value_; }
  // Signed code: +g for x_g, -g for its inverse.
  constexpr int code() const { return value_; }
  // Dense index in [0, 2r): 2(g-1) for x_g, 2(g-1)+1 for its inverse.
  constexpr int order_key() const { return 2 * (generator() - 1) + (value_ < 0 ? 1 : 0); }
  static constexpr Letter from_order_key(int key) { return Letter(key / 2 + 1, key % 2 ? -1 : 1); }

  constexpr bool operator==(const Letter&) const = default;
  constexpr std::strong_ordering operator<=>(const Letter& other) const {
    return order_key() <=> other.order_key();
  }

 private:
  int value_ = 0;
};

// A freely reduced word in F_r. Construction always reduces.
class Word {
 public:
  explicit Word(int rank = 2);
  // Validates letters against the rank and freely reduces.
  Word(int rank, std::span<const Letter> letters);
  Word(int rank, std::initializer_list<Letter> letters);

  static Word power(int rank, Letter letter, long long exponent);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  bool is_positive() const;
  bool is_cyclically_reduced() const;

  Word operator*(const Word& rhs) const;

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  friend class CyclicWord;
  struct Trusted {};
  Word(Trusted, int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {}

  int rank_;
  std::vector<Letter> letters_;
};

// The unique freely reduced representative of a raw letter sequence.
Word reduce(int rank, std::span<const Letter> raw);

// A conjugacy class of cyclically reduced words, stored as its least rotation.
class CyclicWord {
 public:
  explicit CyclicWord(int rank = 2);
  // Cyclically reduces and canonicalizes.
  explicit CyclicWord(const Word& word);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  // Periodic access: index taken modulo the length.
  Letter at_cyclic(std::ptrdiff_t i) const;
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word linear() const { return Word(Word::Trusted{}, rank_, letters_); }
  CyclicWord inverse() const { return CyclicWord(linear().inverse()); }
  bool is_positive() const;

  bool operator==(const CyclicWord&) const = default;
  std::strong_ordering operator<=>(const CyclicWord& other) const;

 private:
  struct Canonical {};
  CyclicWord(Canonical, int rank, std::vector<Letter> letters)
      : rank_(rank), letters_(std::move(letters)) {}
  friend void for_each_cyclic(int, std::size_t, const std::function<void(const CyclicWord&)>&,
                              std::optional<Letter>);
  friend struct CyclicReduction cyclic_reduce(const Word&);

  int rank_;
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // input == conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& word);

// Index of the least rotation of a cyclically reduced sequence.
std::size_t least_rotation(std::span<const Letter> letters);

// True iff pattern is a factor of the bi-infinite periodic sequence of word.
bool contains_cyclic_subword(const CyclicWord& word, const Word& pattern);
bool contains_cyclic_subword(const CyclicWord& word, std::span<const Letter> pattern);

struct Syllable {
  int generator;
  long long exponent;
  bool operator==(const Syllable&) const = default;
};

std::vector<Syllable> syllables(const Word& word);
// Runs that straddle the seam are merged.
std::vector<Syllable> syllables(const CyclicWord& word);

std::vector<long long> abelianize(const Word& word);
std::vector<long long> abelianize(const CyclicWord& word);

// Generator occurrence profile used by the positivity shortcuts.
struct SignProfile {
  std::vector<bool> has_positive;  // indexed by generator, slot 0 unused
  std::vector<bool> has_negative;
};
SignProfile sign_profile(const CyclicWord& word);

std::vector<Word> enumerate_reduced(int rank, std::size_t length);
void for_each_reduced(int rank, std::size_t length, const std::function<void(const Word&)>& fn);

// Every cyclically reduced cyclic word of the given length exactly once.
// With first_letter set, only classes whose canonical rotation starts with it.
std::vector<CyclicWord> enumerate_cyclic(int rank, std::size_t length);
void for_each_cyclic(int rank, std::size_t length, const std::function<void(const CyclicWord&)>& fn,
                     std::optional<Letter> first_letter = std::nullopt);

// Text forms. Ranks up to 7 use a..g / A..G; any rank accepts x<i> / X<i>
// tokens separated by whitespace.
Letter parse_letter(std::string_view token, int rank);
Word parse_word(std::string_view text, int rank);
CyclicWord parse_cyclic(std::string_view text, int rank);
std::string format_letter(Letter letter, int rank);
std::string format_letters(std::span<const Letter> letters, int rank);
std::string format_word(const Word& word);
std::string format_word(const CyclicWord& word);

}  // namespace ppgrowth
