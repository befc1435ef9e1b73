#pragma once

#include <tuple>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

/// Integer flow on the complete graph K_n: an antisymmetric labeling of
/// all ordered pairs, value(x,y) = -value(y,x). Only one value per
/// unordered pair is stored (the one for x < y); the mirror is derived by
/// negation, so antisymmetry cannot be broken.
class Flow {
 public:
  static Flow zero(int n);

  /// upper[pair_index(x,y)] = value(x,y) for x < y.
  static Flow from_upper(int n, std::vector<long long> upper);

  /// Full ordered assignment; rejects any pair violating antisymmetry or
  /// left unassigned.
  static Flow from_values(int n, const std::vector<std::tuple<int, int, long long>>& values);

  int order() const noexcept { return n_; }
  long long value(int x, int y) const;

 private:
  Flow(int n, std::vector<long long> upper) : n_(n), upper_(std::move(upper)) {}

  int n_;
  std::vector<long long> upper_;
};

/// A flow with every value in {-1,+1}; encodes a tournament:
/// value(x,y) = +1 means x <_sigma y, i.e. y beats x.
class SelectionFlow {
 public:
  explicit SelectionFlow(Flow f);

  const Flow& flow() const noexcept { return flow_; }
  int order() const noexcept { return flow_.order(); }
  int value(int x, int y) const { return static_cast<int>(flow_.value(x, y)); }

 private:
  Flow flow_;
};

SelectionFlow selection_flow(const Tournament& t);

/// The tournament the flow encodes; selection_flow and induced_tournament
/// are mutually inverse.
Tournament induced_tournament(const SelectionFlow& f);

/// phi(a): sum of outgoing values at a. For a selection flow this equals
/// indegree(a) - outdegree(a) = (n-1) - 2*score(a).
long long total_flow(const Flow& f, int a);
long long total_flow(const SelectionFlow& f, int a);

/// Sum of phi over all vertices; computed honestly and asserted zero.
long long flow_sum(const Flow& f);
long long flow_sum(const SelectionFlow& f);

/// On K_4 exactly one of the two holds: some |phi| = 3, or all |phi| = 1.
enum class K4Class { EmperorLike, AllUnit };
K4Class k4_dichotomy(const SelectionFlow& f);

/// On even-order complete graphs every phi of a selection flow is odd,
/// hence nonzero: positives and negatives partition the vertices and
/// neither side is empty.
struct EvenPartition {
  std::vector<int> positive;  // A = { a : phi(a) > 0 }
  std::vector<int> negative;  // B = { b : phi(b) < 0 }
};
EvenPartition even_partition(const Tournament& t);

}  // namespace tourney
