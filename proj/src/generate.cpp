#include "tourney/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tourney {

Tournament random_tournament(int n, Seed seed) {
  if (n < 1) fail(Errc::ZeroVertices, "tournament needs at least one vertex");
  SplitMix64 rng(seed.value);
  const int p = pair_count(n);
  std::vector<std::uint64_t> words((p + 63) / 64, 0);
  for (int k = 0; k < p; ++k)
    if (rng.next() & 1u) words[k >> 6] |= std::uint64_t{1} << (k & 63);
  return Tournament::from_words(n, std::move(words));
}

AllTournaments::AllTournaments(int n, bool allow_large) : n_(n) {
  if (n < 1) fail(Errc::ZeroVertices, "enumeration needs at least one vertex");
  const int limit = allow_large ? 7 : 6;
  if (n > limit)
    fail(Errc::TooLarge, "enumeration of n=" + std::to_string(n) + " exceeds the n<=" +
                             std::to_string(limit) + " guard");
}

Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
  const int n = t.order();
  if (static_cast<int>(perm.size()) != n) fail(Errc::SizeMismatch, "permutation length");
  std::vector<Arc> arcs;
  arcs.reserve(t.pairs());
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      arcs.emplace_back(t.beats(u, v) ? Arc{perm[u], perm[v]} : Arc{perm[v], perm[u]});
  return Tournament::from_arcs(n, arcs);
}

std::uint64_t canonical_code(const Tournament& t) {
  const int n = t.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = t.code();
  do {
    std::uint64_t code = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        const int pu = perm[u], pv = perm[v];
        const bool lo_beats_hi = pu < pv ? t.beats(pu, pv) : !t.beats(pv, pu);
        if (lo_beats_hi) code |= std::uint64_t{1} << pair_index(u, v);
      }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Tournament> nonisomorphic_representatives(int n) {
  if (n > 6) fail(Errc::TooLarge, "canonicalization is n!-fold; capped at n <= 6");
  std::vector<Tournament> reps;
  for (const Tournament& t : AllTournaments(n))
    if (canonical_code(t) == t.code()) reps.push_back(t);
  return reps;
}

}  // namespace tourney
