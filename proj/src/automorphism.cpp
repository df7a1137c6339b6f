#include "ppgrowth/automorphism.hpp"

#include <algorithm>

#include "ppgrowth/error.hpp"

namespace ppgrowth {

namespace {

void check_generator(int g, int rank) {
  if (g < 1 || g > rank) {
    throw Error(ErrorKind::InvalidMove, "generator " + std::to_string(g) + " outside rank " + std::to_string(rank));
  }
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

void validate_move(const ElementaryMove& move, int rank) {
  std::visit(
      [rank](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Substitute>) {
          check_generator(m.generator, rank);
          if (m.replacement.rank() != rank) throw Error(ErrorKind::RankMismatch, "replacement rank differs");
          int occurrences = 0;
          bool positive = true;
          for (Letter l : m.replacement) {
            if (l.generator() == m.generator) {
              ++occurrences;
              positive = l.is_positive();
            }
          }
          if (occurrences != 1 || !positive) {
            throw Error(ErrorKind::InvalidMove, "replacement must be u g v with u, v free of the substituted generator");
          }
        } else if constexpr (std::is_same_v<T, Invert>) {
          check_generator(m.generator, rank);
        } else {
          check_generator(m.first, rank);
          check_generator(m.second, rank);
          if (m.first == m.second) throw Error(ErrorKind::InvalidMove, "swap of a generator with itself");
        }
      },
      move);
}

ElementaryMove inverse_move(const ElementaryMove& move) {
  if (const auto* s = std::get_if<Substitute>(&move)) {
    // g -> u g v is undone by g -> u^-1 g v^-1.
    auto letters = s->replacement.letters();
    auto pos = static_cast<std::size_t>(
        std::find_if(letters.begin(), letters.end(), [&](Letter l) { return l.generator() == s->generator; }) -
        letters.begin());
    const int rank = s->replacement.rank();
    Word u(rank, letters.subspan(0, pos));
    Word v(rank, letters.subspan(pos + 1));
    Word g(rank, {Letter::positive(s->generator)});
    return Substitute{s->generator, u.inverse() * g * v.inverse()};
  }
  return move;
}

std::vector<Letter> move_image(const ElementaryMove& move, Letter letter) {
  return std::visit(
      [letter](const auto& m) -> std::vector<Letter> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Substitute>) {
          if (letter.generator() != m.generator) return {letter};
          Word img = letter.is_positive() ? m.replacement : m.replacement.inverse();
          return {img.begin(), img.end()};
        } else if constexpr (std::is_same_v<T, Invert>) {
          if (letter.generator() != m.generator) return {letter};
          return {letter.inverse()};
        } else {
          if (letter.generator() == m.first) return {Letter(m.second, letter.sign())};
          if (letter.generator() == m.second) return {Letter(m.first, letter.sign())};
          return {letter};
        }
      },
      move);
}

Word apply_move(const ElementaryMove& move, const Word& word) {
  validate_move(move, word.rank());
  std::vector<Letter> raw;
  raw.reserve(word.size());
  for (Letter l : word) {
    auto img = move_image(move, l);
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return Word(word.rank(), raw);
}

Automorphism::Automorphism(int rank, std::vector<ElementaryMove> moves) : rank_(rank), moves_(std::move(moves)) {
  for (const auto& m : moves_) validate_move(m, rank_);
}

Automorphism& Automorphism::then(const ElementaryMove& move) {
  validate_move(move, rank_);
  moves_.push_back(move);
  return *this;
}

Automorphism& Automorphism::then(const Automorphism& other) {
  if (other.rank_ != rank_) throw Error(ErrorKind::RankMismatch, "composing automorphisms of different rank");
  moves_.insert(moves_.end(), other.moves_.begin(), other.moves_.end());
  return *this;
}

Automorphism Automorphism::inverse() const {
  std::vector<ElementaryMove> inv;
  inv.reserve(moves_.size());
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) inv.push_back(inverse_move(*it));
  return Automorphism(rank_, std::move(inv));
}

Word Automorphism::apply(const Word& word) const {
  if (word.rank() != rank_) throw Error(ErrorKind::RankMismatch, "word rank differs from automorphism rank");
  Word w = word;
  for (const auto& m : moves_) w = apply_move(m, w);
  return w;
}

CyclicWord Automorphism::apply(const CyclicWord& word) const { return CyclicWord(apply(word.linear())); }

Word Automorphism::image_of(int generator) const {
  check_generator(generator, rank_);
  return apply(Word(rank_, {Letter::positive(generator)}));
}

std::string format_move(const ElementaryMove& move, int rank) {
  auto gen = [rank](int g) { return format_letter(Letter::positive(g), rank); };
  return std::visit(
      [&](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Substitute>) {
          return gen(m.generator) + "->" + format_word(m.replacement);
        } else if constexpr (std::is_same_v<T, Invert>) {
          return gen(m.generator) + "->" + format_letter(Letter::negative(m.generator), rank);
        } else {
          return gen(m.first) + "<->" + gen(m.second);
        }
      },
      move);
}

ElementaryMove parse_move(const std::string& text, int rank) {
  ElementaryMove move;
  if (auto p = text.find("<->"); p != std::string::npos) {
    Letter a = parse_letter(trim(text.substr(0, p)), rank);
    Letter b = parse_letter(trim(text.substr(p + 3)), rank);
    if (!a.is_positive() || !b.is_positive()) throw Error(ErrorKind::InvalidMove, "swap takes generators");
    move = Swap{a.generator(), b.generator()};
  } else if (auto q = text.find("->"); q != std::string::npos) {
    Letter g = parse_letter(trim(text.substr(0, q)), rank);
    if (!g.is_positive()) throw Error(ErrorKind::InvalidMove, "left side must be a generator");
    Word rhs = parse_word(trim(text.substr(q + 2)), rank);
    if (rhs.size() == 1 && rhs[0] == g.inverse()) {
      move = Invert{g.generator()};
    } else {
      move = Substitute{g.generator(), rhs};
    }
  } else {
    throw Error(ErrorKind::ParseError, "move '" + text + "' lacks '->' or '<->'");
  }
  validate_move(move, rank);
  return move;
}

}  // namespace ppgrowth
