#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "tourney/core.hpp"

namespace tourney {

/// Reproducibility handle: the same (n, seed) always yields the same tournament.
struct Seed {
  std::uint64_t value = 0;
};

/// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
/// generators", OOPSLA 2014). Fixed published algorithm so generated
/// tournaments are reproducible across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Pair k (colex order) is oriented by the low bit of the k-th SplitMix64
/// output: bit set = lower index beats higher.
Tournament random_tournament(int n, Seed seed);

/// Input range over all 2^(n(n-1)/2) labeled tournaments on n vertices,
/// in increasing order of the packed orientation bits. Guarded at n <= 6;
/// allow_large admits n = 7 (2^21 tournaments).
class AllTournaments {
 public:
  explicit AllTournaments(int n, bool allow_large = false);

  class iterator {
   public:
    using value_type = Tournament;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(int n, std::uint64_t code) : n_(n), code_(code) {}

    Tournament operator*() const { return Tournament::from_code(n_, code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++code_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }
    friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

   private:
    int n_;
    std::uint64_t code_;
  };

  iterator begin() const { return iterator(n_, 0); }
  iterator end() const { return iterator(n_, size()); }
  std::uint64_t size() const { return std::uint64_t{1} << pair_count(n_); }
  int order() const noexcept { return n_; }

 private:
  int n_;
};

/// Relabeled copy: arc u -> v becomes perm[u] -> perm[v].
Tournament relabel(const Tournament& t, const std::vector<int>& perm);

/// Least packed code over all n! relabelings. Requires pairs() <= 64.
std::uint64_t canonical_code(const Tournament& t);

/// One representative per isomorphism class, each the least packed code of
/// its class, listed in increasing code order. Brute force over all n!
/// relabelings of all tournaments, so hard-capped at n <= 6.
std::vector<Tournament> nonisomorphic_representatives(int n);

}  // namespace tourney
