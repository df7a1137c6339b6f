#pragma once
// Brute-force reference implementations. They work on plain strings over
// a..g / A..G and share no code with the library.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline char inv(char c) { return std::islower(static_cast<unsigned char>(c)) ? char(std::toupper(c)) : char(std::tolower(c)); }

inline int key(char c) {
  int g = std::tolower(static_cast<unsigned char>(c)) - 'a';
  return 2 * g + (std::isupper(static_cast<unsigned char>(c)) ? 1 : 0);
}

inline bool less_word(const std::string& x, const std::string& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](char p, char q) { return key(p) < key(q); });
}

inline std::string reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() == inv(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline std::string inverse(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = inv(c);
  return out;
}

inline std::string cyclic_reduce(std::string w) {
  w = reduce(w);
  while (w.size() >= 2 && w.front() == inv(w.back())) w = w.substr(1, w.size() - 2);
  return w;
}

// Least rotation by trying all of them.
inline std::string canon(const std::string& w) {
  std::string c = cyclic_reduce(w);
  std::string best = c;
  for (std::size_t i = 1; i < c.size(); ++i) {
    std::string r = c.substr(i) + c.substr(0, i);
    if (less_word(r, best)) best = r;
  }
  return best;
}

inline std::string alphabet(int rank) {
  std::string s;
  for (int g = 0; g < rank; ++g) {
    s.push_back(char('a' + g));
    s.push_back(char('A' + g));
  }
  return s;
}

// All strings of the length over the full alphabet, filtered.
inline std::set<std::string> cyclic_words(int rank, std::size_t n) {
  std::set<std::string> out;
  std::string al = alphabet(rank);
  std::string w(n, 'a');
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      if (cyclic_reduce(w).size() == n) out.insert(canon(w));
      return;
    }
    for (char c : al) {
      w[i] = c;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

// Image of the word under letter substitutions; inverses map to inverse images.
inline std::string substitute(const std::string& w, const std::map<char, std::string>& images) {
  std::string out;
  for (char c : w) {
    char lo = char(std::tolower(c));
    auto it = images.find(lo);
    std::string img = it == images.end() ? std::string(1, lo) : it->second;
    out += std::islower(static_cast<unsigned char>(c)) ? img : inverse(img);
  }
  return reduce(out);
}

inline std::string phi(const std::string& w) { return canon(substitute(w, {{'b', "ba"}})); }
inline std::string gamma(const std::string& w) { return canon(substitute(w, {{'a', "b"}, {'b', "a"}})); }

inline bool positive(const std::string& w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return std::islower(static_cast<unsigned char>(c)); });
}

// Pattern occurs somewhere in the bi-infinite periodic word.
inline bool contains_cyclic(const std::string& w, const std::string& pattern) {
  if (w.empty()) return pattern.empty();
  std::string big;
  while (big.size() < w.size() + pattern.size()) big += w;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (big.compare(i, pattern.size(), pattern) == 0) return true;
  return false;
}

// Every occurrence of x is flanked by y on both sides, reading cyclically.
inline bool flanked(const std::string& w, char x, char y) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] != x) continue;
    if (w[(i + n - 1) % n] != y || w[(i + 1) % n] != y) return false;
  }
  return true;
}

inline bool in_G(const std::string& w) { return !w.empty() && flanked(w, 'B', 'a'); }

// w, phi(w), ..., phi^n(w) all in G.
inline bool in_Rn(std::string w, int n) {
  for (int i = 0; i <= n; ++i) {
    if (!in_G(w)) return false;
    w = phi(w);
  }
  return true;
}

inline bool in_RnL(const std::string& w, int n) {
  if (!in_Rn(w, n)) return false;
  std::string v = w;
  for (int i = 0; i <= n; ++i) v = phi(v);
  return in_G(gamma(v));
}

inline long long abel_sum(const std::string& w, char g) {
  long long s = 0;
  for (char c : w) {
    if (c == g) ++s;
    if (c == inv(g)) --s;
  }
  return s;
}

inline bool zero_abelianization(const std::string& w, int rank) {
  for (int g = 0; g < rank; ++g)
    if (abel_sum(w, char('a' + g)) != 0) return false;
  return true;
}

// ---------------------------------------------------------------- matrices

using Mat = std::vector<std::vector<mpz_class>>;

// Fraction-free Gaussian elimination.
inline mpz_class bareiss_det(Mat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// det(x I - A) at an integer point.
inline mpz_class charpoly_at(const Mat& a, long x) {
  Mat m = a;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j ? mpz_class(x) : mpz_class(0)) - a[i][j];
  return bareiss_det(m);
}

// ---------------------------------------------------------------- paths

struct Graph {
  std::vector<char> labels;
  std::vector<std::vector<int>> succ;
};

// Every closed path of length n, as the label string read from its start.
inline void closed_paths(const Graph& g, std::size_t n, const std::function<void(const std::string&)>& fn) {
  if (n == 0) return;
  std::string w;
  std::function<void(int, int)> go = [&](int start, int v) {
    w.push_back(g.labels[v]);
    if (w.size() == n) {
      for (int s : g.succ[v])
        if (s == start) fn(w);
    } else {
      for (int s : g.succ[v]) go(start, s);
    }
    w.pop_back();
  };
  for (int s = 0; s < static_cast<int>(g.labels.size()); ++s) go(s, s);
}

inline std::size_t count_closed_paths(const Graph& g, std::size_t n) {
  std::size_t c = 0;
  closed_paths(g, n, [&](const std::string&) { ++c; });
  return c;
}

inline std::set<std::string> path_language(const Graph& g, std::size_t n) {
  std::set<std::string> out;
  closed_paths(g, n, [&](const std::string& w) { out.insert(canon(w)); });
  return out;
}

}  // namespace oracle
