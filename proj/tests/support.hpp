#pragma once
// Bridges between library types and the string oracles.

#include <set>
#include <string>

#include "oracles.hpp"
#include "ppgrowth/error.hpp"
#include "ppgrowth/growthlab.hpp"

namespace support {

inline std::string str(const ppgrowth::CyclicWord& w) { return ppgrowth::format_word(w); }
inline std::string str(const ppgrowth::Word& w) { return ppgrowth::format_word(w); }

inline ppgrowth::CyclicWord cyc(const std::string& s, int rank = 2) { return ppgrowth::parse_cyclic(s, rank); }
inline ppgrowth::Word word(const std::string& s, int rank = 2) { return ppgrowth::parse_word(s, rank); }

inline oracle::Graph graph(const ppgrowth::Automaton& a) {
  oracle::Graph g;
  for (std::size_t i = 0; i < a.size(); ++i) {
    g.labels.push_back(ppgrowth::format_letter(a.label_at(i), a.rank())[0]);
    g.succ.emplace_back();
  }
  for (const auto& e : a.edges()) g.succ[a.index_of(e.src)].push_back(static_cast<int>(a.index_of(e.dst)));
  return g;
}

inline oracle::Mat dense(const ppgrowth::IntMatrix& m) {
  oracle::Mat out(m.size(), std::vector<mpz_class>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

inline std::set<std::string> strings(const std::set<ppgrowth::CyclicWord>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(str(w));
  return out;
}

// Forbidden-subword description of the F_2 lower-bound language.
inline bool f2_lower_predicate(const std::string& w) {
  if (w.empty()) return false;
  if (oracle::contains_cyclic(w, "BA") || oracle::contains_cyclic(w, "AB")) return false;
  for (std::size_t k = 0; k <= w.size(); ++k)
    if (oracle::contains_cyclic(w, "B" + std::string(k, 'a') + "B")) return false;
  return true;
}

}  // namespace support
