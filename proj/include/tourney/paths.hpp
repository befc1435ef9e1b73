#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

/// A complete (Hamiltonian) directed path: every vertex once, each
/// consecutive pair oriented forward.
struct CompletePath {
  std::vector<int> order;
};

bool is_complete_path(const Tournament& t, const std::vector<int>& order);

/// Five independently evaluated views of the same property, plus the
/// triple counts. A tournament is transitive iff it is acyclic iff its
/// score sequence is (0,1,...,n-1); the counts always satisfy
/// transitive + cyclic = n(n-1)(n-2)/6.
struct TransitivityReport {
  bool is_transitive;
  bool has_cycle;
  std::optional<std::uint64_t> complete_path_count;  // only when counting was requested
  bool score_is_identity_staircase;
  std::uint64_t transitive_triples;
  std::uint64_t cyclic_triples;
};

/// Insertion construction: vertex k enters the existing path at the first
/// position the orientations permit; such a spot always exists.
CompletePath redei_path(const Tournament& t);

/// Exact count over all n! orderings; always odd. Guarded at n <= 8.
std::uint64_t count_complete_paths(const Tournament& t);

/// Score-sequence formula: sum of s(s-1)/2 over all vertex scores.
std::uint64_t transitive_triples_count(const Tournament& t);

/// Total triples minus transitive ones.
std::uint64_t cyclic_triples_count(const Tournament& t);

/// Largest cyclic-triple count any n-vertex tournament attains:
/// (n^3 - n)/24 for odd n, (n^3 - 4n)/24 for even n.
std::uint64_t max_cyclic_triples(int n);

/// Exhaustive argmax over all labeled tournaments; lowest packed code wins
/// ties. Same n guard as enumeration.
struct ExtremalCyclic {
  std::uint64_t count;
  Tournament witness;
};
ExtremalCyclic max_cyclic_witness(int n, bool allow_large = false);

/// count_paths enables the factorial path count (n <= 8 only).
TransitivityReport transitivity_report(const Tournament& t, bool count_paths);

}  // namespace tourney
