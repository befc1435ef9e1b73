#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tourney/error.hpp"

namespace tourney {

/// Directed arc (winner, loser): winner beats loser.
using Arc = std::pair<int, int>;

/// Index of the unordered pair {u,v}, u < v, in colexicographic order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
/// Pairs inside {0,...,k-1} occupy the first k(k-1)/2 slots.
constexpr int pair_index(int u, int v) noexcept { return v * (v - 1) / 2 + u; }

constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Ceiling on vertex counts accepted from any input; keeps pair arithmetic
/// in int range and allocations sane.
constexpr int kMaxOrder = 4096;

/// A tournament on n labeled vertices: exactly one orientation per
/// unordered pair. Identically, a weak selection sigma on {0,...,n-1}
/// where sigma({u,v}) is the beaten element: u beats v <=> sigma({u,v}) = v.
///
/// Orientations are packed one bit per pair; bit pair_index(u,v) (u < v)
/// is set when u beats v. The packed integer doubles as the enumeration
/// code and the canonical-form key. Immutable after construction.
class Tournament {
 public:
  static Tournament from_arcs(int n, const std::vector<Arc>& arcs);

  /// Code is the packed orientation bits; requires pair_count(n) <= 64.
  static Tournament from_code(int n, std::uint64_t code);

  /// All pairs oriented low-beats-high when the corresponding bit is set.
  static Tournament from_words(int n, std::vector<std::uint64_t> words);

  int order() const noexcept { return n_; }
  int pairs() const noexcept { return pair_count(n_); }

  /// u ->_sigma v : u beats (pecks) v.
  bool beats(int u, int v) const;

  /// sigma({u,v}): the beaten element of the pair.
  int selection(int u, int v) const;

  /// All arcs as (winner, loser), sorted lexicographically.
  std::vector<Arc> arcs() const;

  /// Packed orientation bits as a single integer; requires pairs() <= 64.
  std::uint64_t code() const;

  const std::vector<std::uint64_t>& words() const noexcept { return bits_; }

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Tournament& a, const Tournament& b) { return !(a == b); }

 private:
  Tournament(int n, std::vector<std::uint64_t> bits) : n_(n), bits_(std::move(bits)) {}

  bool bit(int k) const { return (bits_[k >> 6] >> (k & 63)) & 1u; }

  int n_;
  std::vector<std::uint64_t> bits_;
};

/// Irreflexive directed graph; both arc directions may be present.
/// Houses communication networks and their 0/1 matrices.
class Digraph {
 public:
  Digraph(int n, const std::vector<Arc>& arcs);

  /// Square 0/1 matrix with zero diagonal; entry (i,j) = 1 means i -> j.
  static Digraph from_matrix(const std::vector<std::vector<int>>& m);
  static Digraph from_tournament(const Tournament& t);

  int order() const noexcept { return n_; }
  bool has_arc(int u, int v) const;
  std::vector<Arc> arcs() const;
  std::vector<std::vector<int>> matrix() const;
  Digraph converse() const;

 private:
  explicit Digraph(int n);

  int n_;
  std::vector<std::uint8_t> adj_;  // row-major n*n
};

Tournament tournament_from_arcs(int n, const std::vector<Arc>& arcs);

/// Every arc reversed; the complementary selection. An involution.
Tournament converse(const Tournament& t);

/// Sub-tournament on the listed vertices; vertex k of the result is
/// subset[k] of the original, orientations preserved.
Tournament restrict(const Tournament& t, const std::vector<int>& subset);

/// s ~ t : t equals s or t equals converse(s), arc for arc.
bool equivalent(const Tournament& s, const Tournament& t);

/// Triple-wise equivalence: restrictions to every 3-subset are equivalent.
/// Agrees with equivalent() for n >= 3; implemented independently as an
/// oracle, not as a call to equivalent().
bool equivalent_via_triples(const Tournament& s, const Tournament& t);

}  // namespace tourney
