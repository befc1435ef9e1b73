#include "tourney/core.hpp"

#include <algorithm>
#include <string>

namespace tourney {

namespace {

std::vector<std::uint64_t> empty_bits(int n) {
  if (n < 1) fail(Errc::ZeroVertices, "tournament needs at least one vertex");
  if (n > kMaxOrder)
    fail(Errc::TooLarge, "order " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(kMaxOrder));
  return std::vector<std::uint64_t>((pair_count(n) + 63) / 64, 0);
}

void set_bit(std::vector<std::uint64_t>& w, int k) { w[k >> 6] |= std::uint64_t{1} << (k & 63); }

}  // namespace

Tournament Tournament::from_arcs(int n, const std::vector<Arc>& arcs) {
  auto bits = empty_bits(n);
  // 0 = unseen, 1 = low beats high, 2 = high beats low
  std::vector<std::uint8_t> seen(pair_count(n), 0);
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::IndexOutOfRange,
           "arc (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," +
               std::to_string(n) + ")");
    if (u == v) fail(Errc::SelfArc, "arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const int lo = std::min(u, v), hi = std::max(u, v);
    const int k = pair_index(lo, hi);
    const std::uint8_t dir = (u < v) ? 1 : 2;
    if (seen[k] != 0)
      fail(Errc::ConflictingArcs,
           "pair {" + std::to_string(lo) + "," + std::to_string(hi) + "} oriented more than once");
    seen[k] = dir;
    if (dir == 1) set_bit(bits, k);
  }
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (seen[pair_index(u, v)] == 0)
        fail(Errc::MissingPair, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} unoriented");
  return Tournament(n, std::move(bits));
}

Tournament Tournament::from_code(int n, std::uint64_t code) {
  auto bits = empty_bits(n);  // validates the order first
  const int p = pair_count(n);
  if (p > 64) fail(Errc::TooLarge, "code form limited to 64 pairs");
  if (p < 64 && (code >> p) != 0) fail(Errc::BadParameters, "code has bits beyond pair count");
  if (!bits.empty()) bits[0] = code;
  return Tournament(n, std::move(bits));
}

Tournament Tournament::from_words(int n, std::vector<std::uint64_t> words) {
  auto bits = empty_bits(n);
  if (words.size() != bits.size()) fail(Errc::BadParameters, "word count mismatch");
  const int p = pair_count(n);
  if (p % 64 != 0 && !words.empty()) {
    const std::uint64_t mask = (std::uint64_t{1} << (p % 64)) - 1;
    if ((words.back() & ~mask) != 0) fail(Errc::BadParameters, "bits beyond pair count");
  }
  return Tournament(n, std::move(words));
}

bool Tournament::beats(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    fail(Errc::IndexOutOfRange, "vertex outside [0," + std::to_string(n_) + ")");
  if (u == v) return false;
  return u < v ? bit(pair_index(u, v)) : !bit(pair_index(v, u));
}

int Tournament::selection(int u, int v) const { return beats(u, v) ? v : u; }

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> out;
  out.reserve(pairs());
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v && beats(u, v)) out.emplace_back(u, v);
  return out;  // ascending (u,v) scan is already lexicographic
}

std::uint64_t Tournament::code() const {
  if (pairs() > 64) fail(Errc::TooLarge, "code form limited to 64 pairs");
  return bits_.empty() ? 0 : bits_[0];
}

Tournament tournament_from_arcs(int n, const std::vector<Arc>& arcs) {
  return Tournament::from_arcs(n, arcs);
}

Tournament converse(const Tournament& t) {
  const int n = t.order();
  std::vector<std::uint64_t> w = t.words();
  const int p = pair_count(n);
  for (auto& word : w) word = ~word;
  if (!w.empty() && p % 64 != 0) w.back() &= (std::uint64_t{1} << (p % 64)) - 1;
  return Tournament::from_words(n, std::move(w));
}

Tournament restrict(const Tournament& t, const std::vector<int>& subset) {
  if (subset.empty()) fail(Errc::EmptySubset, "restriction needs at least one vertex");
  const int n = t.order();
  std::vector<char> used(n, 0);
  for (int v : subset) {
    if (v < 0 || v >= n) fail(Errc::IndexOutOfRange, "subset vertex " + std::to_string(v));
    if (used[v]) fail(Errc::DuplicateIndex, "vertex " + std::to_string(v) + " listed twice");
    used[v] = 1;
  }
  const int m = static_cast<int>(subset.size());
  std::vector<Arc> arcs;
  arcs.reserve(pair_count(m));
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i)
      arcs.emplace_back(t.beats(subset[i], subset[j]) ? Arc{i, j} : Arc{j, i});
  return Tournament::from_arcs(m, arcs);
}

bool equivalent(const Tournament& s, const Tournament& t) {
  if (s.order() != t.order()) fail(Errc::SizeMismatch, "tournaments have different orders");
  return t == s || t == converse(s);
}

bool equivalent_via_triples(const Tournament& s, const Tournament& t) {
  if (s.order() != t.order()) fail(Errc::SizeMismatch, "tournaments have different orders");
  const int n = s.order();
  if (n < 3) fail(Errc::TooFewVertices, "triple-wise equivalence needs n >= 3");
  std::vector<int> z(3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        z = {i, j, k};
        const Tournament rs = restrict(s, z);
        const Tournament rt = restrict(t, z);
        if (rt != rs && rt != converse(rs)) return false;
      }
  return true;
}

Digraph::Digraph(int n) : n_(n) {
  if (n < 1) fail(Errc::ZeroVertices, "digraph needs at least one vertex");
  if (n > kMaxOrder)
    fail(Errc::TooLarge, "order " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(kMaxOrder));
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::IndexOutOfRange, "arc endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) fail(Errc::SelfArc, "arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[static_cast<std::size_t>(u) * n + v] = 1;
  }
}

Digraph Digraph::from_matrix(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  if (n < 1) fail(Errc::ZeroVertices, "matrix is empty");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) fail(Errc::ParseError, "matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (m[i][j] != 0 && m[i][j] != 1) fail(Errc::ParseError, "matrix entries must be 0 or 1");
      if (i == j && m[i][j] != 0) fail(Errc::SelfArc, "nonzero diagonal entry");
      if (m[i][j] == 1) arcs.emplace_back(i, j);
    }
  }
  return Digraph(n, arcs);
}

Digraph Digraph::from_tournament(const Tournament& t) {
  return Digraph(t.order(), t.arcs());
}

bool Digraph::has_arc(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    fail(Errc::IndexOutOfRange, "vertex outside [0," + std::to_string(n_) + ")");
  return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.emplace_back(u, v);
  return out;
}

std::vector<std::vector<int>> Digraph::matrix() const {
  std::vector<std::vector<int>> m(n_, std::vector<int>(n_, 0));
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) m[u][v] = adj_[static_cast<std::size_t>(u) * n_ + v];
  return m;
}

Digraph Digraph::converse() const {
  Digraph r(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      r.adj_[static_cast<std::size_t>(v) * n_ + u] = adj_[static_cast<std::size_t>(u) * n_ + v];
  return r;
}

}  // namespace tourney
