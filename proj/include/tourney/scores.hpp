#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

/// Nondecreasing sequence of vertex scores. Construction sorts its input;
/// entries must lie in [0, n-1].
class ScoreSequence {
 public:
  explicit ScoreSequence(std::vector<int> scores);

  const std::vector<int>& values() const noexcept { return scores_; }
  int size() const noexcept { return static_cast<int>(scores_.size()); }
  long long sum() const;

  friend bool operator==(const ScoreSequence& a, const ScoreSequence& b) {
    return a.scores_ == b.scores_;
  }
  friend bool operator!=(const ScoreSequence& a, const ScoreSequence& b) { return !(a == b); }

 private:
  std::vector<int> scores_;
};

/// Score = outdegree: the number of vertices v beats.
int score_of(const Tournament& t, int v);

/// Indegree: |sigma^{-1}(v)|. score_of + indegree_of = n - 1.
int indegree_of(const Tournament& t, int v);

ScoreSequence score_sequence(const Tournament& t);

/// Landau's condition: total sum n(n-1)/2 and every prefix sum of length
/// k < n at least k(k-1)/2. The empty sequence is invalid.
bool landau_check(const ScoreSequence& seq);

/// Reason the sequence fails Landau's condition, or nullopt when valid.
std::optional<std::string> landau_violation(const ScoreSequence& seq);

/// Some tournament with the given score sequence. Recursive greedy: the
/// largest remaining requirement beats that many smallest requirements,
/// the rest decrement, re-sort, recurse; ties broken by lowest index.
Tournament realize(const ScoreSequence& seq);

}  // namespace tourney
