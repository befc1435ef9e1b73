#pragma once

#include <optional>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

/// Entry (u,v) = length of a shortest directed path u -> v; nullopt when v
/// is unreachable from u; 0 on the diagonal.
using DistanceMatrix = std::vector<std::vector<std::optional<int>>>;

/// Pecking-order roles. Emperor beats everyone; a slave is beaten by
/// everyone; serfs are the rest; a king reaches every vertex in <= 2 steps.
/// At most one emperor and at most one slave can exist (two all-losers
/// would still have an arc between them). For n = 1 the sole vertex counts
/// as emperor, not slave.
struct DominanceReport {
  std::optional<int> emperor;
  std::vector<int> slaves;  // |slaves| <= 1
  std::vector<int> serfs;   // sorted
  std::vector<int> kings;   // sorted, never empty
  DistanceMatrix distances;
};

/// The unique vertex with score n-1, if any.
std::optional<int> emperor_of(const Tournament& t);

DominanceReport classify(const Tournament& t);

/// All vertices of maximal score; each is a king with all distances <= 2.
std::vector<int> kings_by_max_score(const Tournament& t);

/// Deterministic scalar accessor: the lowest-index max-score king.
int king_of(const Tournament& t);

/// Per-source breadth-first search over the arcs.
DistanceMatrix distance_matrix(const Tournament& t);
DistanceMatrix distance_matrix(const Digraph& d);

/// Kings of an emperor-free tournament; always at least three of them.
/// Refuses emperor-holding inputs so the >= 3 contract is never vacuous.
std::vector<int> deadbeat_witnesses(const Tournament& t);

/// Vertices that reach every other vertex in one or two stages. Requires
/// every pair to be linked in at least one direction; run on the converse
/// digraph for the dual "can be reached by everyone" set.
std::vector<int> two_stage_communicators(const Digraph& d);

}  // namespace tourney
