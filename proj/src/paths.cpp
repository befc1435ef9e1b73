#include "tourney/paths.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tourney/generate.hpp"
#include "tourney/scores.hpp"

namespace tourney {

namespace {

constexpr int kPathCountLimit = 8;  // 8! = 40320 orderings

bool transitive_by_triple_scan(const Tournament& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (t.beats(a, b) && t.beats(b, c) && !t.beats(a, c)) return false;
      }
  return true;
}

bool has_directed_cycle(const Tournament& t) {
  const int n = t.order();
  // colors: 0 unvisited, 1 on stack, 2 done
  std::vector<int> color(n, 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, next candidate)
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    stack.clear();
    stack.emplace_back(root, 0);
    color[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == n) {
        color[u] = 2;
        stack.pop_back();
        continue;
      }
      const int v = next++;
      if (v == u || !t.beats(u, v)) continue;
      if (color[v] == 1) return true;
      if (color[v] == 0) {
        color[v] = 1;
        stack.emplace_back(v, 0);
      }
    }
  }
  return false;
}

}  // namespace

bool is_complete_path(const Tournament& t, const std::vector<int>& order) {
  const int n = t.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> used(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || used[v]) return false;
    used[v] = 1;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!t.beats(order[i], order[i + 1])) return false;
  return true;
}

CompletePath redei_path(const Tournament& t) {
  const int n = t.order();
  std::vector<int> path{0};
  for (int k = 1; k < n; ++k) {
    // first position whose occupant k beats; append if k beats nobody
    std::size_t pos = path.size();
    for (std::size_t i = 0; i < path.size(); ++i)
      if (t.beats(k, path[i])) {
        pos = i;
        break;
      }
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(pos), k);
  }
  CompletePath result{std::move(path)};
  if (!is_complete_path(t, result.order)) throw std::logic_error("redei_path: invalid path");
  return result;
}

std::uint64_t count_complete_paths(const Tournament& t) {
  const int n = t.order();
  if (n > kPathCountLimit)
    fail(Errc::TooLarge, "path counting is factorial; guarded at n <= " +
                             std::to_string(kPathCountLimit));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; ok && i + 1 < n; ++i) ok = t.beats(perm[i], perm[i + 1]);
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t transitive_triples_count(const Tournament& t) {
  std::uint64_t total = 0;
  for (int v = 0; v < t.order(); ++v) {
    const long long s = score_of(t, v);
    total += static_cast<std::uint64_t>(s * (s - 1) / 2);
  }
  return total;
}

std::uint64_t cyclic_triples_count(const Tournament& t) {
  const std::uint64_t n = static_cast<std::uint64_t>(t.order());
  return n * (n - 1) * (n - 2) / 6 - transitive_triples_count(t);
}

std::uint64_t max_cyclic_triples(int n) {
  if (n < 1) fail(Errc::ZeroVertices, "need at least one vertex");
  const std::uint64_t m = static_cast<std::uint64_t>(n);
  return n % 2 == 1 ? (m * m * m - m) / 24 : (m * m * m - 4 * m) / 24;
}

ExtremalCyclic max_cyclic_witness(int n, bool allow_large) {
  std::optional<ExtremalCyclic> best;
  for (const Tournament& t : AllTournaments(n, allow_large)) {
    const std::uint64_t c = cyclic_triples_count(t);
    if (!best || c > best->count) best = ExtremalCyclic{c, t};
    // enumeration is in increasing code order, so ties keep the lowest code
  }
  return *best;
}

TransitivityReport transitivity_report(const Tournament& t, bool count_paths) {
  TransitivityReport rep{};
  rep.is_transitive = transitive_by_triple_scan(t);
  rep.has_cycle = has_directed_cycle(t);
  if (count_paths) rep.complete_path_count = count_complete_paths(t);

  std::vector<int> staircase(t.order());
  std::iota(staircase.begin(), staircase.end(), 0);
  rep.score_is_identity_staircase = score_sequence(t) == ScoreSequence(staircase);

  rep.transitive_triples = transitive_triples_count(t);
  rep.cyclic_triples = cyclic_triples_count(t);

  if (rep.is_transitive == rep.has_cycle ||
      rep.is_transitive != rep.score_is_identity_staircase)
    throw std::logic_error("transitivity_report: equivalent conditions disagree");
  return rep;
}

}  // namespace tourney
