#include "ppgrowth/potpos.hpp"

#include <algorithm>

#include "ppgrowth/error.hpp"

namespace ppgrowth {

namespace {

constexpr Letter kA = Letter::positive(1);
constexpr Letter kAi = Letter::negative(1);
constexpr Letter kB = Letter::positive(2);
constexpr Letter kBi = Letter::negative(2);

void require_rank2(int rank) {
  if (rank != 2) throw Error(ErrorKind::RankMismatch, "this operation is defined on F_2 only");
}

}  // namespace

std::string format_pair(const CriterionPair& p) {
  return "(" + format_letter(p.x, 2) + "," + format_letter(p.y, 2) + ")";
}

const std::vector<CriterionPair>& canonical_pairs() {
  static const std::vector<CriterionPair> pairs = [] {
    std::vector<CriterionPair> rest;
    for (int xk = 0; xk < 4; ++xk) {
      for (int yk = 0; yk < 4; ++yk) {
        Letter x = Letter::from_order_key(xk), y = Letter::from_order_key(yk);
        if (x.generator() == y.generator()) continue;
        CriterionPair p{x, y};
        if (p == CriterionPair{kBi, kA} || p == CriterionPair{kAi, kB}) continue;
        rest.push_back(p);
      }
    }
    std::vector<CriterionPair> out{{kBi, kA}, {kAi, kB}};
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }();
  return pairs;
}

bool satisfies(const CyclicWord& w, const CriterionPair& p) {
  const auto n = static_cast<std::ptrdiff_t>(w.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (w[static_cast<std::size_t>(i)] != p.x) continue;
    if (w.at_cyclic(i - 1) != p.y || w.at_cyclic(i + 1) != p.y) return false;
  }
  return true;
}

std::vector<CriterionPair> goldstein_check(const CyclicWord& w, bool include_degenerate) {
  require_rank2(w.rank());
  std::vector<CriterionPair> out;
  for (const auto& p : canonical_pairs())
    if (satisfies(w, p)) out.push_back(p);
  if (include_degenerate) {
    for (int k = 0; k < 4; ++k) {
      Letter x = Letter::from_order_key(k);
      if (satisfies(w, {x, x})) out.push_back({x, x});
    }
  }
  return out;
}

ElementaryMove phi_move() { return Substitute{2, Word(2, {kB, kA})}; }
ElementaryMove gamma_move() { return Swap{1, 2}; }

Automorphism normalizing_relabeling(const CriterionPair& p) {
  if (p.x.generator() == p.y.generator() || p.x.generator() > 2 || p.y.generator() > 2) {
    throw Error(ErrorKind::InvalidCriterionPair, "pair " + format_pair(p) + " is not one of the 8 canonical pairs");
  }
  Automorphism sigma(2);
  Letter x = p.x, y = p.y;
  if (x.generator() == 1) {
    sigma.then(Swap{1, 2});
    x = Letter(2, x.sign());
    y = Letter(1, y.sign());
  }
  if (x == kB) sigma.then(Invert{2});
  if (y == kAi) sigma.then(Invert{1});
  return sigma;
}

std::vector<Automorphism> relabeling_group() {
  std::vector<Automorphism> out;
  for (int swap = 0; swap < 2; ++swap) {
    for (int inv = 0; inv < 4; ++inv) {
      Automorphism s(2);
      if (swap) s.then(Swap{1, 2});
      if (inv & 1) s.then(Invert{1});
      if (inv & 2) s.then(Invert{2});
      out.push_back(s);
    }
  }
  return out;
}

std::string_view to_string(SwitchOutcome o) {
  switch (o) {
    case SwitchOutcome::Positive: return "Positive";
    case SwitchOutcome::KeepsBa: return "KeepsBa";
    case SwitchOutcome::SwitchesToAb: return "SwitchesToAb";
    case SwitchOutcome::AllButOne: return "AllButOne";
    case SwitchOutcome::Fail: return "Fail";
  }
  return "Fail";
}

SwitchResult switch_step(const CyclicWord& w, const CriterionPair& p) {
  require_rank2(w.rank());
  if (!satisfies(w, p)) {
    throw Error(ErrorKind::CriterionNotSatisfied, format_word(w) + " does not satisfy " + format_pair(p));
  }
  Automorphism moves = normalizing_relabeling(p);
  moves.then(phi_move());
  SwitchResult r{moves.apply(w), SwitchOutcome::Fail, false, false, moves};
  r.keeps_Ba = satisfies(r.image, {kBi, kA});
  r.switches_to_Ab = satisfies(r.image, {kAi, kB});
  if (r.image.is_positive()) {
    r.outcome = SwitchOutcome::Positive;
  } else if (r.keeps_Ba) {
    r.outcome = SwitchOutcome::KeepsBa;
  } else if (r.switches_to_Ab) {
    r.outcome = SwitchOutcome::SwitchesToAb;
  } else if (all_but_one(r.image)) {
    r.outcome = SwitchOutcome::AllButOne;
  }
  return r;
}

std::optional<Automorphism> all_but_one_for(const CyclicWord& w, int g) {
  const int r = w.rank();
  if (g < 1 || g > r) return std::nullopt;
  SignProfile prof = sign_profile(w);
  if (!prof.has_negative[static_cast<std::size_t>(g)]) return std::nullopt;
  for (int i = 1; i <= r; ++i) {
    if (i != g && prof.has_negative[static_cast<std::size_t>(i)]) return std::nullopt;
  }
  long long k = 0;
  for (const Syllable& s : syllables(w)) {
    if (s.generator == g && s.exponent < 0) k = std::max(k, -s.exponent);
  }
  Automorphism witness(r);
  for (int i = 1; i <= r; ++i) {
    if (i == g) continue;
    witness.then(Substitute{i, Word(r, {Letter::positive(i)}) * Word::power(r, Letter::positive(g), k)});
  }
  if (!witness.apply(w).is_positive()) return std::nullopt;
  return witness;
}

std::optional<Automorphism> all_but_one(const CyclicWord& w) {
  for (int g = 1; g <= w.rank(); ++g) {
    if (auto a = all_but_one_for(w, g)) return a;
  }
  return std::nullopt;
}

std::optional<Automorphism> all_but_one(const Word& w) { return all_but_one(CyclicWord(w)); }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::PP: return "PP";
    case Verdict::NotPP: return "NotPP";
    case Verdict::Undecided: return "Undecided";
  }
  return "Undecided";
}

std::size_t default_max_steps(std::size_t length) { return 10 * length + 100; }

Decision decide_pp2(const CyclicWord& w, std::optional<std::size_t> max_steps) {
  require_rank2(w.rank());
  const std::size_t limit = max_steps.value_or(default_max_steps(w.size()));
  Decision d;
  CyclicWord cur = w;
  std::size_t steps = 0;
  while (true) {
    if (cur.is_positive()) {
      d.verdict = Verdict::PP;
      break;
    }
    if (auto abo = all_but_one(cur)) {
      d.witness.then(*abo);
      cur = abo->apply(cur);
      d.verdict = Verdict::PP;
      break;
    }
    SignProfile prof = sign_profile(cur);
    bool inverted = false;
    for (int g = 1; g <= 2; ++g) {
      if (prof.has_negative[static_cast<std::size_t>(g)] && !prof.has_positive[static_cast<std::size_t>(g)]) {
        d.witness.then(Invert{g});
        cur = Automorphism(2, {Invert{g}}).apply(cur);
        inverted = true;
      }
    }
    if (inverted) continue;
    auto pairs = goldstein_check(cur);
    if (pairs.empty()) {
      d.verdict = Verdict::NotPP;
      d.certificate = cur;
      d.certificate_step = steps;
      break;
    }
    if (steps >= limit) {
      d.verdict = Verdict::Undecided;
      break;
    }
    SwitchResult s = switch_step(cur, pairs.front());
    d.witness.then(s.moves);
    cur = s.image;
    ++steps;
  }
  d.steps_used = steps;
  d.final_word = cur;
  return d;
}

Decision decide_pp2(const Word& w, std::optional<std::size_t> max_steps) {
  require_rank2(w.rank());
  return decide_pp2(CyclicWord(w), max_steps);
}

Automorphism positivize_rank_word(int r, const CyclicWord& w) {
  if (w.rank() != r) throw Error(ErrorKind::RankMismatch, "word rank differs from machine rank");
  if (!accepts(build_rank_machine(r), w)) {
    throw Error(ErrorKind::NotMachineWord, format_word(w) + " is not spelled by a closed path of the rank machine");
  }
  Automorphism phi(r);
  if (w.is_positive()) return phi;
  // A lone negative syllable has nothing for the final step to lean on.
  if (auto sy = syllables(w); sy.size() == 1) {
    phi.then(Invert{sy.front().generator});
    return phi;
  }
  CyclicWord cur = w;
  auto gen = [r](int g, long long e) { return Word::power(r, Letter::positive(g), e); };
  auto push = [&](const ElementaryMove& m) {
    phi.then(m);
    cur = Automorphism(r, {m}).apply(cur);
  };
  for (int j = 2; j <= r - 1; ++j) {
    long long neg = 0;
    for (const Syllable& s : syllables(cur))
      if (s.generator == j && s.exponent < 0) neg = std::max(neg, -s.exponent);
    long long nj = neg + 1;
    push(Substitute{j - 1, gen(j, nj) * gen(j - 1, 1) * gen(j, nj)});
  }
  for (int j = r - 1; j >= 2; --j) push(Substitute{j, gen(j, 1) * gen(j - 1, 1)});
  if (!cur.is_positive()) {
    auto abo = all_but_one_for(cur, r);
    if (!abo) throw Error(ErrorKind::ScheduleFailed, "no positive image after descent for " + format_word(w));
    phi.then(*abo);
  }
  if (!phi.apply(w).is_positive()) throw Error(ErrorKind::ScheduleFailed, "image of " + format_word(w) + " not positive");
  return phi;
}

// ---------------------------------------------------------------- tree

bool in_G(const CyclicWord& w) {
  require_rank2(w.rank());
  return satisfies(w, {kBi, kA});
}

namespace {

CyclicWord phi(const CyclicWord& w) { return Automorphism(2, {phi_move()}).apply(w); }
CyclicWord gamma(const CyclicWord& w) { return Automorphism(2, {gamma_move()}).apply(w); }

}  // namespace

bool tree_member(const std::string& path, const CyclicWord& w) {
  CyclicWord cur = w;
  for (char step : path) {
    if (step != 'R' && step != 'L') throw Error(ErrorKind::InvalidArgument, "tree path must be over {R, L}");
    if (!in_G(cur)) return false;
    cur = phi(cur);
    if (step == 'L') cur = gamma(cur);
  }
  return in_G(cur);
}

bool tree_survives(const CyclicWord& w, int n) {
  if (!in_G(w)) return false;
  if (n <= 0) return true;
  CyclicWord v = phi(w);
  return tree_survives(v, n - 1) || tree_survives(gamma(v), n - 1);
}

// ---------------------------------------------------------------- languages

int spec_rank(const LanguageSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AutomatonSpec>) return s.automaton.rank();
        else if constexpr (std::is_same_v<T, ForbiddenSpec>) return s.rules.rank;
        else if constexpr (std::is_same_v<T, TreeSpec>) return 2;
        else return s.rank;
      },
      spec);
}

bool member(const LanguageSpec& spec, const CyclicWord& w) {
  return std::visit(
      [&w](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AutomatonSpec>) return accepts(s.automaton, w);
        else if constexpr (std::is_same_v<T, ForbiddenSpec>) return s.rules.accepts(w);
        else if constexpr (std::is_same_v<T, TreeSpec>) return tree_member(s.path, w);
        else return s.predicate(w);
      },
      spec);
}

LanguageSpec named_spec(const std::string& name, int rank) {
  auto suffix_number = [&](std::size_t pos) {
    try {
      std::size_t used = 0;
      long v = std::stol(name.substr(pos), &used);
      if (used != name.size() - pos || v < 0) throw std::invalid_argument("bad");
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad parameter in language '" + name + "'");
    }
  };
  if (name == "all") return PredicateSpec{name, rank, [](const CyclicWord&) { return true; }};
  if (name == "commutator") {
    return PredicateSpec{name, rank, [](const CyclicWord& w) {
                           auto v = abelianize(w);
                           return std::all_of(v.begin(), v.end(), [](long long e) { return e == 0; });
                         }};
  }
  if (name == "goldstein") {
    require_rank2(rank);
    return PredicateSpec{name, 2, [](const CyclicWord& w) { return !goldstein_check(w).empty(); }};
  }
  if (name == "pp2") {
    require_rank2(rank);
    return PredicateSpec{name, 2, [](const CyclicWord& w) { return decide_pp2(w).verdict == Verdict::PP; }};
  }
  if (name == "f2-lower") return AutomatonSpec{build_f2_lower()};
  if (name.rfind("rn:", 0) == 0) return ForbiddenSpec{rules_Rn(suffix_number(3))};
  if (name.rfind("rnl:", 0) == 0) return ForbiddenSpec{rules_RnL(suffix_number(4))};
  if (name.rfind("tree:", 0) == 0) return TreeSpec{name.substr(5)};
  throw Error(ErrorKind::InvalidArgument, "unknown language '" + name + "'");
}

// ---------------------------------------------------------------- encodings

namespace {

using Gap = std::vector<Letter>;

bool has_b(const CyclicWord& w) { return std::find(w.begin(), w.end(), kB) != w.end(); }

// Contents between consecutive b's, starting after the first b of the
// canonical rotation.
std::vector<Gap> gaps_of(const CyclicWord& w) {
  const std::size_t n = w.size();
  std::size_t first = static_cast<std::size_t>(std::find(w.begin(), w.end(), kB) - w.begin());
  std::vector<Gap> gaps;
  Gap cur;
  for (std::size_t k = 1; k <= n; ++k) {
    Letter l = w[(first + k) % n];
    if (l == kB) {
      gaps.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(l);
    }
  }
  return gaps;
}

CyclicWord from_gaps(const std::vector<Gap>& gaps) {
  std::vector<Letter> letters;
  for (const Gap& g : gaps) {
    letters.push_back(kB);
    letters.insert(letters.end(), g.begin(), g.end());
  }
  return CyclicWord(Word(2, letters));
}

Gap run(Letter l, long long k) { return Gap(static_cast<std::size_t>(std::max(0LL, k)), l); }

bool is_a_gap(const Gap& g) {
  return std::all_of(g.begin(), g.end(), [](Letter l) { return l == kA; });
}
bool is_A_gap(const Gap& g) {
  return !g.empty() && std::all_of(g.begin(), g.end(), [](Letter l) { return l == kAi; });
}

// a^k0 B a^m1 B ... B a^ks as exponents [k0, m1, ..., ks]; empty unless the gap
// has that shape with at least two B's.
std::vector<long long> segment_exponents(const Gap& g) {
  std::vector<long long> parts{0};
  for (Letter l : g) {
    if (l == kA) {
      ++parts.back();
    } else if (l == kBi) {
      parts.push_back(0);
    } else {
      return {};
    }
  }
  if (parts.size() < 3) return {};
  return parts;
}

Gap join_segment(const std::vector<long long>& parts) {
  Gap g;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) g.push_back(kBi);
    Gap r = run(kA, parts[i]);
    g.insert(g.end(), r.begin(), r.end());
  }
  return g;
}

std::vector<Gap> plain_replacement(const std::vector<long long>& parts) {
  const std::size_t s = parts.size() - 1;
  std::vector<Gap> out{run(kA, parts[0] - 1), run(kAi, parts[1] + 2)};
  for (std::size_t i = 2; i < s; ++i) out.push_back(run(kAi, parts[i]));
  out.push_back(run(kA, parts[s] - 1));
  return out;
}

std::vector<Gap> signal_replacement(long n, const std::vector<long long>& parts) {
  const std::size_t s = parts.size() - 1;
  std::vector<Gap> out{run(kA, parts[0] - 1), run(kAi, 1), run(kAi, n + 3)};
  for (std::size_t i = 1; i < s; ++i) out.push_back(run(kAi, parts[i] - n));
  out.push_back(run(kA, parts[s] - 1));
  return out;
}

void require_domain(long n, const CyclicWord& w) {
  require_rank2(w.rank());
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  if (!has_b(w) || !rules_RnL(n).accepts(w)) {
    throw Error(ErrorKind::NotInDomain, format_word(w) + " is not a b-containing word of R^" + std::to_string(n) + "L");
  }
}

CyclicWord encode_impl(long n, const CyclicWord& w, bool with_signal) {
  std::vector<Gap> out;
  bool signal_pending = with_signal;
  for (const Gap& g : gaps_of(w)) {
    auto parts = segment_exponents(g);
    if (parts.empty()) {
      out.push_back(g);
      continue;
    }
    auto repl = signal_pending ? signal_replacement(n, parts) : plain_replacement(parts);
    signal_pending = false;
    out.insert(out.end(), repl.begin(), repl.end());
  }
  if (signal_pending) throw Error(ErrorKind::NotInDomain, format_word(w) + " has no segment to carry the signal");
  return from_gaps(out);
}

struct Merge {
  std::size_t start;   // first gap index, cyclic
  std::size_t length;  // number of gaps replaced
  Gap gap;
};

std::vector<Gap> apply_merges(const std::vector<Gap>& gaps, std::vector<Merge> merges) {
  const std::size_t g = gaps.size();
  std::vector<int> owner(g, -1);
  for (std::size_t m = 0; m < merges.size(); ++m) {
    if (merges[m].length > g) throw Error(ErrorKind::NotInDomain, "overlapping segments");
    for (std::size_t k = 0; k < merges[m].length; ++k) {
      auto& o = owner[(merges[m].start + k) % g];
      if (o >= 0) throw Error(ErrorKind::NotInDomain, "overlapping segments");
      o = static_cast<int>(m);
    }
  }
  std::size_t begin = merges.empty() ? 0 : merges.front().start;
  std::vector<Gap> out;
  for (std::size_t k = 0; k < g;) {
    std::size_t i = (begin + k) % g;
    if (owner[i] < 0) {
      out.push_back(gaps[i]);
      ++k;
      continue;
    }
    const Merge& m = merges[static_cast<std::size_t>(owner[i])];
    if (m.start != i) throw Error(ErrorKind::NotInDomain, "malformed segment");
    out.push_back(m.gap);
    k += m.length;
  }
  return out;
}

// Chains a^k0 | A^(m1+2) | A^m2 ... | a^ks, started by an A-gap of length at
// least n+3 that follows a non-A gap.
std::vector<Merge> plain_chains(long n, const std::vector<Gap>& gaps) {
  const std::size_t g = gaps.size();
  std::vector<Merge> merges;
  for (std::size_t i = 0; i < g; ++i) {
    const Gap& prev = gaps[(i + g - 1) % g];
    if (!is_A_gap(gaps[i]) || static_cast<long>(gaps[i].size()) < n + 3 || is_A_gap(prev)) continue;
    if (!is_a_gap(prev)) throw Error(ErrorKind::NotInDomain, "chain not preceded by an a-gap");
    std::vector<long long> parts{static_cast<long long>(prev.size()) + 1,
                                 static_cast<long long>(gaps[i].size()) - 2};
    std::size_t j = i + 1;
    while (j - i < g && is_A_gap(gaps[j % g])) parts.push_back(static_cast<long long>(gaps[j++ % g].size()));
    const Gap& end = gaps[j % g];
    if (!is_a_gap(end)) throw Error(ErrorKind::NotInDomain, "chain not closed by an a-gap");
    parts.push_back(static_cast<long long>(end.size()) + 1);
    merges.push_back({(i + g - 1) % g, j - i + 2, join_segment(parts)});
  }
  return merges;
}

}  // namespace

std::optional<long> max_RnL_level(const CyclicWord& w) {
  std::optional<long> best;
  for (long n = 0; n <= static_cast<long>(w.size()); ++n)
    if (rules_RnL(n).accepts(w)) best = n;
  return best;
}

CyclicWord encode_f(long n, const CyclicWord& w) {
  require_domain(n, w);
  return encode_impl(n, w, false);
}

CyclicWord decode_f(long n, const CyclicWord& w) {
  require_rank2(w.rank());
  if (!has_b(w)) throw Error(ErrorKind::NotInDomain, "encoded words contain b");
  auto gaps = gaps_of(w);
  CyclicWord out = from_gaps(apply_merges(gaps, plain_chains(n, gaps)));
  bool ok = false;
  try {
    ok = encode_f(n, out) == w;
  } catch (const Error&) {
  }
  if (!ok) throw Error(ErrorKind::NotInDomain, format_word(w) + " is not an encoded word");
  return out;
}

CyclicWord encode_signal(long n, const CyclicWord& w) {
  require_domain(n, w);
  if (rules_RnL(n + 1).accepts(w)) {
    throw Error(ErrorKind::NotInDomain, "n = " + std::to_string(n) + " is not maximal for " + format_word(w));
  }
  return encode_impl(n, w, true);
}

SignalDecoding decode_signal(const CyclicWord& w) {
  require_rank2(w.rank());
  if (!has_b(w)) throw Error(ErrorKind::NoSignal, "no b in " + format_word(w));
  auto gaps = gaps_of(w);
  const std::size_t g = gaps.size();
  // Marker: a-gap, then A, then A^(m+3); the signal carries the largest m.
  std::optional<std::size_t> at;
  long n = -1;
  for (std::size_t i = 0; i < g && g >= 3; ++i) {
    const Gap& one = gaps[(i + 1) % g];
    const Gap& big = gaps[(i + 2) % g];
    if (!is_a_gap(gaps[i]) || !is_A_gap(one) || one.size() != 1 || !is_A_gap(big) || big.size() < 3) continue;
    long m = static_cast<long>(big.size()) - 3;
    if (m > n) {
      n = m;
      at = i;
    }
  }
  if (!at) throw Error(ErrorKind::NoSignal, "no signal marker in " + format_word(w));
  std::vector<long long> parts{static_cast<long long>(gaps[*at].size()) + 1};
  std::size_t j = *at + 3;
  while (j - *at < g && is_A_gap(gaps[j % g])) parts.push_back(static_cast<long long>(gaps[j++ % g].size()) + n);
  if (parts.size() < 2 || !is_a_gap(gaps[j % g])) throw Error(ErrorKind::NotInDomain, "malformed signal segment");
  parts.push_back(static_cast<long long>(gaps[j % g].size()) + 1);
  std::vector<Merge> merges{{*at, j - *at + 1, join_segment(parts)}};
  auto rest = plain_chains(n, gaps);
  merges.insert(merges.end(), rest.begin(), rest.end());
  CyclicWord out = from_gaps(apply_merges(gaps, merges));
  bool ok = false;
  try {
    ok = encode_signal(n, out) == w;
  } catch (const Error&) {
  }
  if (!ok) throw Error(ErrorKind::NotInDomain, format_word(w) + " is not a signal encoding");
  return {n, out};
}

}  // namespace ppgrowth
