#include "ppgrowth/machines.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "ppgrowth/error.hpp"

namespace ppgrowth {

// ---------------------------------------------------------------- Automaton

Automaton::Automaton(int rank, std::vector<Node> nodes, std::vector<Edge> edges)
    : rank_(rank), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (rank < 1) throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
  std::sort(nodes_.begin(), nodes_.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i > 0 && nodes_[i].id == nodes_[i - 1].id) {
      throw Error(ErrorKind::InvalidArgument, "duplicate node id " + std::to_string(nodes_[i].id));
    }
    if (nodes_[i].label.code() == 0 || nodes_[i].label.generator() > rank) {
      throw Error(ErrorKind::InvalidLetter, "node " + std::to_string(nodes_[i].id) + " label outside rank");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  succ_.assign(nodes_.size(), {});
  for (const Edge& e : edges_) succ_[index_of(e.src)].push_back(index_of(e.dst));
}

std::size_t Automaton::index_of(int id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id, [](const Node& n, int v) { return n.id < v; });
  if (it == nodes_.end() || it->id != id) {
    throw Error(ErrorKind::DanglingEdge, "no node with id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

// ---------------------------------------------------------------- checks

std::string describe(const Witness& w) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, InverseEdgeWitness>) {
          return "edge " + std::to_string(v.edge.src) + "->" + std::to_string(v.edge.dst) + " joins inverse labels";
        } else if constexpr (std::is_same_v<T, UnreachableWitness>) {
          return "node " + std::to_string(v.to) + " unreachable from node " + std::to_string(v.from);
        } else if constexpr (std::is_same_v<T, PeriodWitness>) {
          return v.period == 0 ? std::string("no cycles") : "period " + std::to_string(v.period);
        } else {
          auto join = [](const std::vector<int>& p) {
            std::string s;
            for (int id : p) s += (s.empty() ? "" : ",") + std::to_string(id);
            return s;
          };
          return "paths [" + join(v.first) + "] and [" + join(v.second) + "] share endpoints and image";
        }
      },
      w);
}

CheckResult check_reduced(const Automaton& a) {
  for (const Edge& e : a.edges()) {
    if (a.label_at(a.index_of(e.src)).is_inverse_of(a.label_at(a.index_of(e.dst)))) {
      return {false, InverseEdgeWitness{e}};
    }
  }
  return {};
}

namespace {

std::vector<long> bfs_levels(const std::vector<std::vector<std::size_t>>& adj, std::size_t start) {
  std::vector<long> level(adj.size(), -1);
  std::deque<std::size_t> queue{start};
  level[start] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u]) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return level;
}

std::vector<std::vector<std::size_t>> reverse_adjacency(const Automaton& a) {
  std::vector<std::vector<std::size_t>> rev(a.size());
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v : a.successors(u)) rev[v].push_back(u);
  return rev;
}

std::vector<std::vector<std::size_t>> forward_adjacency(const Automaton& a) {
  std::vector<std::vector<std::size_t>> fwd(a.size());
  for (std::size_t u = 0; u < a.size(); ++u) fwd[u] = a.successors(u);
  return fwd;
}

}  // namespace

CheckResult check_strongly_connected(const Automaton& a) {
  if (a.size() == 0) return {};
  const int root = a.nodes()[0].id;
  auto fwd = bfs_levels(forward_adjacency(a), 0);
  for (std::size_t v = 0; v < a.size(); ++v)
    if (fwd[v] < 0) return {false, UnreachableWitness{root, a.nodes()[v].id}};
  auto back = bfs_levels(reverse_adjacency(a), 0);
  for (std::size_t v = 0; v < a.size(); ++v)
    if (back[v] < 0) return {false, UnreachableWitness{a.nodes()[v].id, root}};
  return {};
}

CheckResult check_mixing(const Automaton& a) {
  if (a.size() > 0 && is_primitive(adjacency_matrix(a))) return {};
  if (auto sc = check_strongly_connected(a); !sc) return sc;
  if (a.size() == 0) return {false, PeriodWitness{0}};
  // Strongly connected but not primitive: the period is gcd of level defects.
  auto level = bfs_levels(forward_adjacency(a), 0);
  long d = 0;
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v : a.successors(u)) d = std::gcd(d, std::labs(level[u] + 1 - level[v]));
  return {false, PeriodWitness{d}};
}

CheckResult check_one_to_constant(const Automaton& a) {
  if (!check_mixing(a)) throw Error(ErrorKind::NotMixing, "one-to-constant check requires a mixing automaton");
  const std::size_t n = a.size();
  auto key = [n](std::size_t u, std::size_t v) { return u * n + v; };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n * n, kNone);
  std::vector<std::size_t> origin(n * n, kNone);  // diagonal node the branch left from
  std::vector<char> seen(n * n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t u : a.successors(x)) {
      for (std::size_t v : a.successors(x)) {
        if (u == v || a.label_at(u) != a.label_at(v) || seen[key(u, v)]) continue;
        seen[key(u, v)] = 1;
        origin[key(u, v)] = x;
        queue.push_back(key(u, v));
      }
    }
  }
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    std::size_t u = k / n, v = k % n;
    for (std::size_t u2 : a.successors(u)) {
      for (std::size_t v2 : a.successors(v)) {
        if (a.label_at(u2) != a.label_at(v2)) continue;
        if (u2 == v2) {
          // Walk back to the branching point.
          std::vector<int> first{a.nodes()[u2].id}, second{a.nodes()[v2].id};
          std::size_t cur = k;
          while (true) {
            first.push_back(a.nodes()[cur / n].id);
            second.push_back(a.nodes()[cur % n].id);
            if (parent[cur] == kNone) break;
            cur = parent[cur];
          }
          first.push_back(a.nodes()[origin[cur]].id);
          second.push_back(a.nodes()[origin[cur]].id);
          std::reverse(first.begin(), first.end());
          std::reverse(second.begin(), second.end());
          return {false, DuplicatePathsWitness{first, second}};
        }
        std::size_t k2 = key(u2, v2);
        if (seen[k2]) continue;
        seen[k2] = 1;
        parent[k2] = k;
        queue.push_back(k2);
      }
    }
  }
  return {};
}

PropertyReport check_properties(const Automaton& a) {
  PropertyReport r;
  auto note = [&r](const CheckResult& c) {
    if (c.witness) r.witnesses.push_back(*c.witness);
    return c.holds;
  };
  r.reduced = note(check_reduced(a));
  r.strongly_connected = note(check_strongly_connected(a));
  auto mixing = check_mixing(a);
  r.mixing = mixing.holds;
  if (!mixing && r.strongly_connected) note(mixing);
  if (r.mixing) r.one_to_constant = note(check_one_to_constant(a));
  return r;
}

IntMatrix adjacency_matrix(const Automaton& a) {
  IntMatrix m(a.size());
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v : a.successors(u)) m(u, v) = 1;
  return m;
}

mpz_class count_closed_paths(const Automaton& a, unsigned long n) {
  if (n == 0) return 0;
  return adjacency_matrix(a).pow(n).trace();
}

std::set<CyclicWord> language(const Automaton& a, std::size_t n) {
  if (!check_reduced(a)) throw Error(ErrorKind::NotReduced, "language requires a reduced automaton");
  std::set<CyclicWord> out;
  if (n == 0) return out;
  std::vector<std::size_t> path;
  std::vector<Letter> letters;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    std::size_t u = path.back();
    if (path.size() == n) {
      const auto& s = a.successors(u);
      if (std::find(s.begin(), s.end(), start) != s.end()) out.insert(CyclicWord(Word(a.rank(), letters)));
      return;
    }
    for (std::size_t v : a.successors(u)) {
      path.push_back(v);
      letters.push_back(a.label_at(v));
      extend(start);
      path.pop_back();
      letters.pop_back();
    }
  };
  for (std::size_t s = 0; s < a.size(); ++s) {
    path.assign(1, s);
    letters.assign(1, a.label_at(s));
    extend(s);
  }
  return out;
}

bool accepts(const Automaton& a, const CyclicWord& w) {
  if (w.empty() || w.rank() != a.rank()) return false;
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (a.label_at(s) != w[0]) continue;
    // Nodes reachable from s spelling w[0..i].
    std::vector<char> cur(n, 0), next(n, 0);
    cur[s] = 1;
    bool alive = true;
    for (std::size_t i = 1; i < w.size() && alive; ++i) {
      std::fill(next.begin(), next.end(), 0);
      alive = false;
      for (std::size_t u = 0; u < n; ++u) {
        if (!cur[u]) continue;
        for (std::size_t v : a.successors(u)) {
          if (a.label_at(v) == w[i]) next[v] = alive = true;
        }
      }
      cur.swap(next);
    }
    if (!alive) continue;
    for (std::size_t u = 0; u < n; ++u) {
      if (!cur[u]) continue;
      const auto& succ = a.successors(u);
      if (std::find(succ.begin(), succ.end(), s) != succ.end()) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------- bounded-run rules

bool ForbiddenRules::accepts(const CyclicWord& w) const {
  const std::size_t n = w.size();
  if (n == 0 || w.rank() != rank) return false;
  auto pair_forbidden = [this](Letter x, Letter y) {
    if (std::find(pairs.begin(), pairs.end(), std::pair{x, y}) != pairs.end()) return true;
    return std::any_of(families.begin(), families.end(), [&](const RunFamily& f) {
      return !f.anchored && f.lo == 0 && f.open == x && f.close == y;
    });
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (pair_forbidden(w[i], w[(i + 1) % n])) return false;
  }
  std::size_t start = 0;
  while (start < n && w[start] == w[0]) ++start;
  if (start == n) {
    // A single repeated letter has no opener.
    return std::none_of(families.begin(), families.end(),
                        [&](const RunFamily& f) { return f.anchored && f.run == w[0]; });
  }
  // start is a run boundary; walk the runs once around.
  std::size_t i = start;
  do {
    Letter c = w.at_cyclic(static_cast<std::ptrdiff_t>(i));
    Letter prev = w.at_cyclic(static_cast<std::ptrdiff_t>(i) - 1);
    long k = 0;
    while (w.at_cyclic(static_cast<std::ptrdiff_t>(i + static_cast<std::size_t>(k))) == c) ++k;
    Letter next = w.at_cyclic(static_cast<std::ptrdiff_t>(i + static_cast<std::size_t>(k)));
    for (const RunFamily& f : families) {
      if (f.run != c) continue;
      if (f.anchored) {
        if (prev != f.open || k > f.hi) return false;
      } else if (prev == f.open && next == f.close && f.lo <= k && k <= f.hi) {
        return false;
      }
    }
    i = (i + static_cast<std::size_t>(k)) % n;
  } while (i != start);
  return true;
}

namespace {

struct RunState {
  int letter;  // order key
  int opener;  // order key, -1 for none
  long count;
  auto operator<=>(const RunState&) const = default;
};

}  // namespace

Automaton compile_rules(const ForbiddenRules& rules) {
  const int rank = rules.rank;
  const int alphabet = 2 * rank;
  for (const RunFamily& f : rules.families) {
    if (f.run == f.open || f.run == f.close) {
      throw Error(ErrorKind::InvalidArgument, "run letter must differ from its delimiters");
    }
  }
  auto L = [](int key) { return Letter::from_order_key(key); };
  auto anchored_run = [&](Letter x) {
    return std::any_of(rules.families.begin(), rules.families.end(),
                       [&](const RunFamily& f) { return f.anchored && f.run == x; });
  };
  // Normalization drops opener and count once no family can still fire.
  auto normalize = [&](RunState s) -> std::optional<RunState> {
    bool live = false;
    if (s.opener >= 0) {
      for (const RunFamily& f : rules.families) {
        if (f.run == L(s.letter) && f.open == L(s.opener) && (f.anchored || s.count <= f.hi)) live = true;
      }
    }
    if (!live) {
      if (anchored_run(L(s.letter))) return std::nullopt;
      return RunState{s.letter, -1, 0};
    }
    return s;
  };
  auto pair_forbidden = [&](Letter x, Letter y) {
    if (x.is_inverse_of(y)) return true;
    if (std::find(rules.pairs.begin(), rules.pairs.end(), std::pair{x, y}) != rules.pairs.end()) return true;
    return std::any_of(rules.families.begin(), rules.families.end(), [&](const RunFamily& f) {
      return !f.anchored && f.lo == 0 && f.open == x && f.close == y;
    });
  };
  auto step = [&](const RunState& s, int y) -> std::optional<RunState> {
    Letter x = L(s.letter);
    if (pair_forbidden(x, L(y))) return std::nullopt;
    if (y == s.letter) {
      if (s.opener < 0) return s;
      RunState t{s.letter, s.opener, s.count + 1};
      for (const RunFamily& f : rules.families) {
        if (f.anchored && f.run == x && f.open == L(s.opener) && t.count > f.hi) return std::nullopt;
      }
      return normalize(t);
    }
    if (s.opener >= 0) {
      for (const RunFamily& f : rules.families) {
        if (!f.anchored && f.run == x && f.open == L(s.opener) && f.close == L(y) && f.lo <= s.count &&
            s.count <= f.hi) {
          return std::nullopt;
        }
      }
    }
    RunState t{y, s.letter, 1};
    for (const RunFamily& f : rules.families) {
      if (f.anchored && f.run == L(y) && f.open == x && t.count > f.hi) return std::nullopt;
    }
    return normalize(t);
  };

  std::set<RunState> states;
  std::deque<RunState> queue;
  auto visit = [&](std::optional<RunState> s) {
    if (s && states.insert(*s).second) queue.push_back(*s);
  };
  for (int x = 0; x < alphabet; ++x) {
    visit(normalize(RunState{x, -1, 0}));
    for (int p = 0; p < alphabet; ++p) {
      if (p != x) visit(normalize(RunState{x, p, 1}));
    }
  }
  std::map<RunState, std::vector<RunState>> succ;
  while (!queue.empty()) {
    RunState s = queue.front();
    queue.pop_front();
    for (int y = 0; y < alphabet; ++y) {
      if (auto t = step(s, y)) {
        succ[s].push_back(*t);
        visit(t);
      }
    }
  }

  // Keep states on cycles: a state survives if it reaches itself.
  std::vector<RunState> all(states.begin(), states.end());
  std::map<RunState, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  std::vector<std::vector<std::size_t>> adj(all.size());
  for (const auto& [s, ts] : succ)
    for (const auto& t : ts) adj[index[s]].push_back(index[t]);
  std::vector<std::vector<char>> reach(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<char> seen(all.size(), 0);
    std::deque<std::size_t> q{i};
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          q.push_back(v);
        }
      }
    }
    reach[i] = std::move(seen);
  }
  std::vector<int> id(all.size(), -1);
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (reach[i][i]) {
      id[i] = static_cast<int>(nodes.size());
      nodes.push_back({id[i], L(all[i].letter)});
    }
  }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < all.size(); ++u) {
    if (id[u] < 0) continue;
    for (std::size_t v : adj[u]) {
      // Edges between different cycle classes carry no closed path.
      if (id[v] >= 0 && reach[v][u]) edges.push_back({id[u], id[v]});
    }
  }
  return Automaton(rank, std::move(nodes), std::move(edges));
}

namespace {

constexpr Letter kA = Letter::positive(1);
constexpr Letter kAi = Letter::negative(1);
constexpr Letter kB = Letter::positive(2);
constexpr Letter kBi = Letter::negative(2);

}  // namespace

ForbiddenRules rules_Rn(long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  ForbiddenRules r;
  r.rank = 2;
  r.pairs = {{kBi, kAi}, {kAi, kBi}};
  r.families = {RunFamily{kBi, kA, kBi, 0, n, false}};
  return r;
}

ForbiddenRules rules_RnL(long n) {
  ForbiddenRules r = rules_Rn(n);
  r.families.push_back(RunFamily{kB, kAi, kB, n + 3, n + 2, true});
  return r;
}

// ---------------------------------------------------------------- builders

Automaton build_goldstein(Letter x, Letter y) {
  if (x.generator() < 1 || x.generator() > 2 || y.generator() < 1 || y.generator() > 2 ||
      x.generator() == y.generator()) {
    throw Error(ErrorKind::InvalidCriterionPair, "need rank-2 letters with y not in {x, x^-1}");
  }
  // Reference machine flanks B by a; sigma maps B to x and a to y.
  auto sigma = [&](Letter l) {
    if (l.generator() == 1) return l.is_positive() ? y : y.inverse();
    return l.is_positive() ? x.inverse() : x;
  };
  std::vector<Node> nodes{{0, sigma(kAi)}, {1, sigma(kB)}, {2, sigma(kA)}, {3, sigma(kBi)}};
  std::vector<Edge> edges{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}};
  return Automaton(2, std::move(nodes), std::move(edges));
}

Automaton build_f2_lower() {
  std::vector<Node> nodes{{0, kA}, {1, kBi}, {2, kA}, {3, kB}, {4, kAi}};
  std::vector<Edge> edges{{0, 0}, {0, 1}, {0, 3}, {1, 2}, {2, 2}, {2, 3},
                          {3, 0}, {3, 3}, {3, 4}, {4, 3}, {4, 4}};
  return Automaton(2, std::move(nodes), std::move(edges));
}

Automaton build_rank_machine_block_variant(int r, const std::string& zeta_zeta) {
  if (r < 3) throw Error(ErrorKind::RankTooSmall, "rank machine needs r >= 3");
  const int m = r - 2;
  // alpha beta gamma delta epsilon zeta eta theta iota
  const std::vector<int> sizes{1, m, 1, 1, m, m, m, m, m};
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t b = 0; b < sizes.size(); ++b) offset[b + 1] = offset[b] + sizes[b];
  std::vector<Letter> labels;
  labels.push_back(Letter::positive(1));
  for (int g = 2; g <= r - 1; ++g) labels.push_back(Letter::positive(g));
  labels.push_back(Letter::positive(r));
  labels.push_back(Letter::negative(r));
  for (int g = 2; g <= r - 1; ++g) labels.push_back(Letter::negative(g));
  for (int g = 2; g <= r - 1; ++g) labels.push_back(Letter::negative(g));
  for (int g = 2; g <= r - 1; ++g) labels.push_back(Letter::positive(g));
  for (int g = 1; g <= r - 2; ++g) labels.push_back(Letter::negative(g));
  for (int g = 2; g <= r - 1; ++g) labels.push_back(Letter::positive(g));

  // Block codes: 0 zero, 1 all ones, I identity, U strictly upper, L = U^T,
  // and sums of those. Entry (row, col) is an edge col -> row.
  const char* const kRows[9][9] = {
      {"1", "1", "1", "1", "0", "1", "0", "0", "1"},
      {"1", "1", "1", "1", "U+L", "U", "0", "0", "U"},
      {"1", "1", "1", "0", "1", "0", "0", "0", "0"},
      {"1", "1", "0", "1", "1", "0", "0", "0", "0"},
      {"1", "L", "0", "0", "L+I", "0", "0", "0", "0"},
      {"1", "U+L", "1", "1", "L", zeta_zeta.c_str(), "0", "0", "U"},
      {"1", "L", "0", "0", "L", "0", "I", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "I", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "I", "I"},
  };
  auto entry = [](const std::string& code, int i, int j) {
    bool on = false;
    std::stringstream ss(code);
    std::string term;
    while (std::getline(ss, term, '+')) {
      if (term == "1") on = true;
      if (term == "I" && i == j) on = true;
      if (term == "U" && i < j) on = true;
      if (term == "L" && i > j) on = true;
    }
    return on;
  };
  std::vector<Node> nodes;
  for (int i = 0; i < offset.back(); ++i) nodes.push_back({i, labels[static_cast<std::size_t>(i)]});
  std::vector<Edge> edges;
  for (int bi = 0; bi < 9; ++bi) {
    for (int bj = 0; bj < 9; ++bj) {
      for (int i = 0; i < sizes[bi]; ++i) {
        for (int j = 0; j < sizes[bj]; ++j) {
          if (!entry(kRows[bi][bj], i, j)) continue;
          int u = offset[bi] + i, v = offset[bj] + j;
          edges.push_back(Edge{v, u});
        }
      }
    }
  }
  return Automaton(r, std::move(nodes), std::move(edges));
}

Automaton build_rank_machine(int r) { return build_rank_machine_block_variant(r, "U+I"); }

Automaton build_Rn(long n) { return compile_rules(rules_Rn(n)); }
Automaton build_RnL(long n) { return compile_rules(rules_RnL(n)); }

Automaton build_named(const std::string& name) {
  auto number_after = [&](std::size_t pos) {
    try {
      std::size_t used = 0;
      long v = std::stol(name.substr(pos), &used);
      if (used != name.size() - pos) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad builder parameter in '" + name + "'");
    }
  };
  if (name == "f2-lower") return build_f2_lower();
  if (name == "goldstein") return build_goldstein(kBi, kA);
  if (name.rfind("goldstein:", 0) == 0 && name.size() == 12) {
    return build_goldstein(parse_letter(name.substr(10, 1), 2), parse_letter(name.substr(11, 1), 2));
  }
  if (name.rfind("rank:", 0) == 0) {
    long r = number_after(5);
    if (r > 64) throw Error(ErrorKind::InvalidArgument, "rank too large");
    return build_rank_machine(static_cast<int>(r));
  }
  if (name.rfind("rn:", 0) == 0) return build_Rn(number_after(3));
  if (name.rfind("rnl:", 0) == 0) return build_RnL(number_after(4));
  throw Error(ErrorKind::InvalidArgument, "unknown builder '" + name + "'");
}

// ---------------------------------------------------------------- text format

Automaton read_automaton(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<int> rank;
  struct PendingNode {
    int id;
    std::string label;
    int line;
  };
  std::vector<PendingNode> pending_nodes;
  std::vector<std::pair<Edge, int>> pending_edges;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string extra;
    if (kw == "rank") {
      int r;
      if (!(ls >> r) || r < 1 || (ls >> extra)) fail("expected 'rank <r>'");
      if (rank) fail("duplicate rank line");
      rank = r;
    } else if (kw == "node") {
      int id;
      std::string label;
      if (!(ls >> id >> label) || (ls >> extra)) fail("expected 'node <id> <label>'");
      pending_nodes.push_back({id, label, lineno});
    } else if (kw == "edge") {
      int s, d;
      if (!(ls >> s >> d) || (ls >> extra)) fail("expected 'edge <src> <dst>'");
      pending_edges.push_back({Edge{s, d}, lineno});
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (!rank) throw Error(ErrorKind::ParseError, "missing rank line");
  std::vector<Node> nodes;
  std::set<int> ids;
  for (const auto& p : pending_nodes) {
    lineno = p.line;
    if (!ids.insert(p.id).second) fail("duplicate node id " + std::to_string(p.id));
    try {
      nodes.push_back({p.id, parse_letter(p.label, *rank)});
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  std::vector<Edge> edges;
  for (const auto& [e, ln] : pending_edges) {
    if (!ids.count(e.src) || !ids.count(e.dst)) {
      throw Error(ErrorKind::DanglingEdge, "line " + std::to_string(ln) + ": edge " + std::to_string(e.src) +
                                               " " + std::to_string(e.dst) + " references a missing node");
    }
    edges.push_back(e);
  }
  return Automaton(*rank, std::move(nodes), std::move(edges));
}

std::string write_automaton(const Automaton& a) {
  std::ostringstream out;
  out << "rank " << a.rank() << "\n";
  for (const Node& n : a.nodes()) out << "node " << n.id << " " << format_letter(n.label, a.rank() > 7 ? 8 : a.rank()) << "\n";
  for (const Edge& e : a.edges()) out << "edge " << e.src << " " << e.dst << "\n";
  return out.str();
}

// ---------------------------------------------------------------- sampling

ClosedPathSampler::ClosedPathSampler(const Automaton& a, std::size_t length)
    : automaton_(&a), length_(length), adj_(adjacency_matrix(a)), cache_(a.size()) {
  if (length == 0) throw Error(ErrorKind::InvalidArgument, "sample length must be positive");
  IntMatrix p = adj_.pow(length);
  for (std::size_t i = 0; i < a.size(); ++i) {
    diagonal_.push_back(p(i, i));
    total_ += p(i, i);
  }
}

const std::vector<std::vector<mpz_class>>& ClosedPathSampler::returns_to(std::size_t start) {
  auto& c = cache_[start];
  if (!c.empty()) return c;
  const std::size_t n = automaton_->size();
  // c[k][w] = number of walks of length k from w to start.
  c.assign(length_ + 1, std::vector<mpz_class>(n));
  c[0][start] = 1;
  for (std::size_t k = 1; k <= length_; ++k) {
    for (std::size_t w = 0; w < n; ++w) {
      mpz_class s = 0;
      for (std::size_t v : automaton_->successors(w)) s += c[k - 1][v];
      c[k][w] = s;
    }
  }
  return c;
}

std::vector<std::size_t> ClosedPathSampler::sample_path(gmp_randclass& rng) {
  if (total_ == 0) throw Error(ErrorKind::InvalidArgument, "no closed paths of this length");
  mpz_class pick = rng.get_z_range(total_);
  std::size_t start = 0;
  while (pick >= diagonal_[start]) pick -= diagonal_[start++];
  const auto& c = returns_to(start);
  std::vector<std::size_t> path{start};
  for (std::size_t i = 0; i + 1 < length_; ++i) {
    std::size_t u = path.back();
    mpz_class r = rng.get_z_range(c[length_ - i][u]);
    for (std::size_t w : automaton_->successors(u)) {
      const mpz_class& weight = c[length_ - i - 1][w];
      if (r < weight) {
        path.push_back(w);
        break;
      }
      r -= weight;
    }
  }
  return path;
}

CyclicWord ClosedPathSampler::sample_word(gmp_randclass& rng) {
  auto path = sample_path(rng);
  std::vector<Letter> letters;
  letters.reserve(path.size());
  for (std::size_t i : path) letters.push_back(automaton_->label_at(i));
  return CyclicWord(Word(automaton_->rank(), letters));
}

}  // namespace ppgrowth
