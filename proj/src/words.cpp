#include "ppgrowth/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ppgrowth/error.hpp"

namespace ppgrowth {

namespace {

void check_letter(Letter l, int rank) {
  if (l.code() == 0 || l.generator() > rank) {
    throw Error(ErrorKind::InvalidLetter,
                "generator " + std::to_string(l.generator()) + " outside rank " + std::to_string(rank));
  }
}

std::vector<Letter> reduce_letters(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back().is_inverse_of(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidLetter: return "InvalidLetter";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotMixing: return "NotMixing";
    case ErrorKind::InvalidCriterionPair: return "InvalidCriterionPair";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::NoRealRoot: return "NoRealRoot";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::CriterionNotSatisfied: return "CriterionNotSatisfied";
    case ErrorKind::NotMachineWord: return "NotMachineWord";
    case ErrorKind::ScheduleFailed: return "ScheduleFailed";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NoSignal: return "NoSignal";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Word

Word::Word(int rank) : rank_(rank) {
  if (rank < 1) throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
}

Word::Word(int rank, std::span<const Letter> letters) : Word(rank) {
  for (Letter l : letters) check_letter(l, rank);
  letters_ = reduce_letters(letters);
}

Word::Word(int rank, std::initializer_list<Letter> letters)
    : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::power(int rank, Letter letter, long long exponent) {
  check_letter(letter, rank);
  Letter l = exponent < 0 ? letter.inverse() : letter;
  std::vector<Letter> v(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent), l);
  return Word(Trusted{}, rank, std::move(v));
}

Word Word::inverse() const {
  std::vector<Letter> v;
  v.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) v.push_back(it->inverse());
  return Word(Trusted{}, rank_, std::move(v));
}

bool Word::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l.is_positive(); });
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || !letters_.front().is_inverse_of(letters_.back());
}

Word Word::operator*(const Word& rhs) const {
  if (rank_ != rhs.rank_) throw Error(ErrorKind::RankMismatch, "concatenating words of different rank");
  std::vector<Letter> v = letters_;
  for (Letter l : rhs.letters_) {
    if (!v.empty() && v.back().is_inverse_of(l)) {
      v.pop_back();
    } else {
      v.push_back(l);
    }
  }
  return Word(Trusted{}, rank_, std::move(v));
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = rank_ <=> other.rank_; c != 0) return c;
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(), other.letters_.begin(),
                                                other.letters_.end());
}

Word reduce(int rank, std::span<const Letter> raw) { return Word(rank, raw); }

// ---------------------------------------------------------------- CyclicWord

std::size_t least_rotation(std::span<const Letter> s) {
  // Two-candidate scan; O(n).
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = s[(i + k) % n];
    Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i = i + k + 1;
    } else {
      j = j + k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord::CyclicWord(int rank) : rank_(rank) {
  if (rank < 1) throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
}

CyclicWord::CyclicWord(const Word& word) : CyclicWord(cyclic_reduce(word).core) {}

Letter CyclicWord::at_cyclic(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(letters_.size());
  return letters_[static_cast<std::size_t>(((i % n) + n) % n)];
}

bool CyclicWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l.is_positive(); });
}

std::strong_ordering CyclicWord::operator<=>(const CyclicWord& other) const {
  if (auto c = rank_ <=> other.rank_; c != 0) return c;
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(), other.letters_.begin(),
                                                other.letters_.end());
}

CyclicReduction cyclic_reduce(const Word& word) {
  auto letters = word.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo].is_inverse_of(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                           letters.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<Letter> conj(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(lo));
  // core = p q with canonical rotation q p, so core = p (q p) p^-1.
  std::size_t shift = least_rotation(core);
  conj.insert(conj.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(shift));
  std::rotate(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(shift), core.end());
  return CyclicReduction{CyclicWord(CyclicWord::Canonical{}, word.rank(), std::move(core)),
                         Word(word.rank(), conj)};
}

bool contains_cyclic_subword(const CyclicWord& word, std::span<const Letter> pattern) {
  if (pattern.empty()) return true;
  const std::size_t n = word.size();
  if (n == 0) return false;
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t j = 0;
    while (j < pattern.size() && word[(start + j) % n] == pattern[j]) ++j;
    if (j == pattern.size()) return true;
  }
  return false;
}

bool contains_cyclic_subword(const CyclicWord& word, const Word& pattern) {
  return contains_cyclic_subword(word, pattern.letters());
}

// ---------------------------------------------------------------- syllables

namespace {

std::vector<Syllable> linear_syllables(std::span<const Letter> letters) {
  std::vector<Syllable> out;
  for (Letter l : letters) {
    if (!out.empty() && out.back().generator == l.generator()) {
      out.back().exponent += l.sign();
    } else {
      out.push_back({l.generator(), l.sign()});
    }
  }
  return out;
}

}  // namespace

std::vector<Syllable> syllables(const Word& word) { return linear_syllables(word.letters()); }

std::vector<Syllable> syllables(const CyclicWord& word) {
  auto out = linear_syllables(word.letters());
  // In a cyclically reduced word adjacent equal generators have equal signs.
  if (out.size() >= 2 && out.front().generator == out.back().generator) {
    out.front().exponent += out.back().exponent;
    out.pop_back();
  }
  return out;
}

std::vector<long long> abelianize(const Word& word) {
  std::vector<long long> v(static_cast<std::size_t>(word.rank()), 0);
  for (Letter l : word) v[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
  return v;
}

std::vector<long long> abelianize(const CyclicWord& word) { return abelianize(word.linear()); }

SignProfile sign_profile(const CyclicWord& word) {
  SignProfile p;
  p.has_positive.assign(static_cast<std::size_t>(word.rank() + 1), false);
  p.has_negative.assign(static_cast<std::size_t>(word.rank() + 1), false);
  for (Letter l : word) {
    auto g = static_cast<std::size_t>(l.generator());
    (l.is_positive() ? p.has_positive : p.has_negative)[g] = true;
  }
  return p;
}

// ---------------------------------------------------------------- enumeration

namespace {

template <typename Fn>
void extend_reduced(int rank, std::size_t length, std::vector<Letter>& buf, Fn&& fn) {
  if (buf.size() == length) {
    fn(buf);
    return;
  }
  for (int key = 0; key < 2 * rank; ++key) {
    Letter l = Letter::from_order_key(key);
    if (!buf.empty() && buf.back().is_inverse_of(l)) continue;
    buf.push_back(l);
    extend_reduced(rank, length, buf, fn);
    buf.pop_back();
  }
}

bool is_least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  for (std::size_t shift = 1; shift < n; ++shift) {
    for (std::size_t k = 0; k < n; ++k) {
      Letter a = s[k];
      Letter b = s[(shift + k) % n];
      if (b < a) return false;
      if (a < b) break;
    }
  }
  return true;
}

}  // namespace

void for_each_reduced(int rank, std::size_t length, const std::function<void(const Word&)>& fn) {
  std::vector<Letter> buf;
  buf.reserve(length);
  extend_reduced(rank, length, buf, [&](const std::vector<Letter>& letters) { fn(Word(rank, letters)); });
}

std::vector<Word> enumerate_reduced(int rank, std::size_t length) {
  std::vector<Word> out;
  for_each_reduced(rank, length, [&](const Word& w) { out.push_back(w); });
  return out;
}

void for_each_cyclic(int rank, std::size_t length, const std::function<void(const CyclicWord&)>& fn,
                     std::optional<Letter> first_letter) {
  if (rank < 1) throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
  if (length == 0) {
    if (!first_letter) fn(CyclicWord(rank));
    return;
  }
  std::vector<Letter> buf;
  buf.reserve(length);
  auto emit = [&](const std::vector<Letter>& letters) {
    if (letters.size() >= 2 && letters.front().is_inverse_of(letters.back())) return;
    if (!is_least_rotation(letters)) return;
    fn(CyclicWord(CyclicWord::Canonical{}, rank, letters));
  };
  auto run_from = [&](Letter first) {
    buf.assign(1, first);
    extend_reduced(rank, length, buf, emit);
  };
  if (first_letter) {
    check_letter(*first_letter, rank);
    run_from(*first_letter);
  } else {
    for (int key = 0; key < 2 * rank; ++key) run_from(Letter::from_order_key(key));
  }
}

std::vector<CyclicWord> enumerate_cyclic(int rank, std::size_t length) {
  std::vector<CyclicWord> out;
  for_each_cyclic(rank, length, [&](const CyclicWord& w) { out.push_back(w); });
  return out;
}

// ---------------------------------------------------------------- text

Letter parse_letter(std::string_view token, int rank) {
  Letter l;
  if (token.size() == 1 && std::isalpha(static_cast<unsigned char>(token[0])) &&
      std::tolower(static_cast<unsigned char>(token[0])) <= 'g' && token[0] != 'x' && token[0] != 'X') {
    char c = token[0];
    int g = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
    l = Letter(g, std::islower(static_cast<unsigned char>(c)) ? 1 : -1);
  } else if (token.size() >= 2 && (token[0] == 'x' || token[0] == 'X')) {
    int g = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), g);
    if (ec != std::errc() || ptr != token.data() + token.size() || g < 1) {
      throw Error(ErrorKind::InvalidLetter, "bad generator token '" + std::string(token) + "'");
    }
    l = Letter(g, token[0] == 'x' ? 1 : -1);
  } else {
    throw Error(ErrorKind::InvalidLetter, "bad letter '" + std::string(token) + "'");
  }
  check_letter(l, rank);
  return l;
}

Word parse_word(std::string_view text, int rank) {
  std::vector<Letter> letters;
  bool token_form = text.find('x') != std::string_view::npos || text.find('X') != std::string_view::npos;
  if (token_form) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i) letters.push_back(parse_letter(text.substr(i, j - i), rank));
      i = j;
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      letters.push_back(parse_letter(std::string_view(&c, 1), rank));
    }
  }
  return Word(rank, letters);
}

CyclicWord parse_cyclic(std::string_view text, int rank) { return CyclicWord(parse_word(text, rank)); }

std::string format_letter(Letter l, int rank) {
  if (rank <= 7) {
    char base = l.is_positive() ? 'a' : 'A';
    return std::string(1, static_cast<char>(base + l.generator() - 1));
  }
  return std::string(l.is_positive() ? "x" : "X") + std::to_string(l.generator());
}

std::string format_letters(std::span<const Letter> letters, int rank) {
  std::string out;
  for (Letter l : letters) {
    if (rank > 7 && !out.empty()) out += ' ';
    out += format_letter(l, rank);
  }
  return out;
}

std::string format_word(const Word& word) { return format_letters(word.letters(), word.rank()); }
std::string format_word(const CyclicWord& word) { return format_letters(word.letters(), word.rank()); }

}  // namespace ppgrowth
