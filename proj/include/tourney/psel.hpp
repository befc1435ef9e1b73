#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

/// C(n, k) in 64 bits; fails on overflow rather than wrapping.
std::uint64_t binomial(int n, int k);

/// Colexicographic rank of a strictly increasing p-subset:
/// rank = sum of C(subset[i], i+1).
std::uint64_t colex_rank(const std::vector<int>& subset);

/// Inverse of colex_rank for p-subsets of [0, m).
std::vector<int> colex_unrank(int m, int p, std::uint64_t rank);

/// A choice function on all p-element subsets of {0,...,m-1}: every subset
/// is mapped to one of its own members. Subsets are indexed by colex rank;
/// storage keeps the position of the chosen element within the sorted
/// subset.
class SubsetSelection {
 public:
  SubsetSelection(int m, int p, std::vector<std::uint8_t> choice_positions);

  /// p = 2 view of a tournament: the pair {u,v} maps to the beaten
  /// element, matching sigma({u,v}).
  static SubsetSelection from_tournament(const Tournament& t);

  int ground_size() const noexcept { return m_; }
  int subset_size() const noexcept { return p_; }
  std::uint64_t domain_size() const noexcept { return static_cast<std::uint64_t>(choice_.size()); }

  std::vector<int> subset_at(std::uint64_t rank) const;
  int choice_at(std::uint64_t rank) const;
  int choice(const std::vector<int>& subset) const;

  friend bool operator==(const SubsetSelection& a, const SubsetSelection& b) {
    return a.m_ == b.m_ && a.p_ == b.p_ && a.choice_ == b.choice_;
  }

 private:
  int m_;
  int p_;
  std::vector<std::uint8_t> choice_;  // position within the sorted subset, per colex rank
};

/// For a p = 2 selection, the tournament with u -> v iff choice({u,v}) = v.
Tournament induced_tournament(const SubsetSelection& sel);

/// kappa(x) = number of subsets whose choice is x. The counts sum to
/// C(m,p) and each is at most C(m-1, p-1); for p = 2 they are the
/// indegrees of the induced tournament.
struct KappaProfile {
  std::vector<std::uint64_t> counts;

  std::uint64_t min() const;
  std::uint64_t max() const;
  bool constant() const { return min() == max(); }

  /// Vertices attaining the minimum count: a nonempty proper subset
  /// whenever kappa is non-constant, usable as a partition side.
  std::vector<int> min_set() const;
};

KappaProfile kappa(const SubsetSelection& sel);

/// Counting necessity: constant kappa forces m | C(m,p). Prime necessity:
/// for prime p, constant kappa forces p not to divide m.
enum class KappaVerdict { ImpossibleByCount, ImpossibleByPrime, Candidate };
KappaVerdict constant_kappa_precheck(int m, int p);

/// Exhaustive depth-first search over all selections in colex subset
/// order, pruned by the running kappa bound (no count may pass C(m,p)/m,
/// and every vertex must still be able to reach it). The budget counts
/// search nodes, not wall time.
struct KappaSearchResult {
  enum class Status { FoundWitness, ExhaustedNone, BudgetExceeded };
  Status status;
  std::optional<SubsetSelection> witness;
  std::uint64_t nodes_visited = 0;
};

KappaSearchResult search_constant_kappa(int m, int p, std::uint64_t budget);

}  // namespace tourney
