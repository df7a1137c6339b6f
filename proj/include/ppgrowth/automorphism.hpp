#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ppgrowth/words.hpp"

namespace ppgrowth {

// g -> replacement, all other generators fixed. The replacement must have the
// form u g v with u, v free of g.
struct Substitute {
  int generator;
  Word replacement;
  bool operator==(const Substitute&) const = default;
};

struct Invert {
  int generator;
  bool operator==(const Invert&) const = default;
};

struct Swap {
  int first;
  int second;
  bool operator==(const Swap&) const = default;
};

using ElementaryMove = std::variant<Substitute, Invert, Swap>;

// Throws InvalidMove unless the move is a well-formed automorphism of F_rank.
void validate_move(const ElementaryMove& move, int rank);

ElementaryMove inverse_move(const ElementaryMove& move);

// Image of a single letter under one move, unreduced.
std::vector<Letter> move_image(const ElementaryMove& move, Letter letter);

// A composite of moves, applied left to right.
class Automorphism {
 public:
  explicit Automorphism(int rank = 2) : rank_(rank) {}
  Automorphism(int rank, std::vector<ElementaryMove> moves);

  int rank() const { return rank_; }
  const std::vector<ElementaryMove>& moves() const { return moves_; }
  bool empty() const { return moves_.empty(); }

  Automorphism& then(const ElementaryMove& move);
  Automorphism& then(const Automorphism& other);

  Automorphism inverse() const;

  Word apply(const Word& word) const;
  CyclicWord apply(const CyclicWord& word) const;
  Word image_of(int generator) const;

  bool operator==(const Automorphism&) const = default;

 private:
  int rank_;
  std::vector<ElementaryMove> moves_;
};

Word apply_move(const ElementaryMove& move, const Word& word);

// Text forms: "b->ba", "a->A" (inversion), "a<->b" (swap).
std::string format_move(const ElementaryMove& move, int rank);
ElementaryMove parse_move(const std::string& text, int rank);

}  // namespace ppgrowth
