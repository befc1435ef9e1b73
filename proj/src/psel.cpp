#include "tourney/psel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tourney {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Colex successor inside [0, m): bump the lowest element that has room,
// reset everything below it.
bool next_subset(std::vector<int>& s, int m) {
  const int p = static_cast<int>(s.size());
  for (int i = 0; i < p; ++i) {
    const int room = (i + 1 < p) ? s[i + 1] : m;
    if (s[i] + 1 < room) {
      ++s[i];
      for (int j = 0; j < i; ++j) s[j] = j;
      return true;
    }
  }
  return false;
}

std::vector<int> first_subset(int p) {
  std::vector<int> s(p);
  for (int i = 0; i < p; ++i) s[i] = i;
  return s;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > UINT64_MAX / num) fail(Errc::TooLarge, "binomial overflow");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t colex_rank(const std::vector<int>& subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0 && subset[i] <= subset[i - 1])
      fail(Errc::BadParameters, "subset must be strictly increasing");
    rank += binomial(subset[i], static_cast<int>(i) + 1);
  }
  return rank;
}

std::vector<int> colex_unrank(int m, int p, std::uint64_t rank) {
  std::vector<int> subset(p);
  int hi = m - 1;
  for (int i = p - 1; i >= 0; --i) {
    while (binomial(hi, i + 1) > rank) --hi;
    subset[i] = hi;
    rank -= binomial(hi, i + 1);
    --hi;
  }
  return subset;
}

SubsetSelection::SubsetSelection(int m, int p, std::vector<std::uint8_t> choice_positions)
    : m_(m), p_(p), choice_(std::move(choice_positions)) {
  if (p < 2 || p >= m) fail(Errc::BadParameters, "need 2 <= p < m");
  if (p > 255) fail(Errc::TooLarge, "choice positions are stored in one byte");
  if (choice_.size() != binomial(m, p))
    fail(Errc::BadParameters, "need one choice per p-subset");
  for (std::uint8_t pos : choice_)
    if (pos >= p) fail(Errc::BadParameters, "choice position outside its subset");
}

SubsetSelection SubsetSelection::from_tournament(const Tournament& t) {
  const int n = t.order();
  if (n < 3) fail(Errc::BadParameters, "pair selections need at least three vertices");
  std::vector<std::uint8_t> pos;
  pos.reserve(binomial(n, 2));
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      pos.push_back(t.selection(u, v) == u ? 0 : 1);
  return SubsetSelection(n, 2, std::move(pos));
}

std::vector<int> SubsetSelection::subset_at(std::uint64_t rank) const {
  if (rank >= domain_size()) fail(Errc::IndexOutOfRange, "subset rank");
  return colex_unrank(m_, p_, rank);
}

int SubsetSelection::choice_at(std::uint64_t rank) const {
  if (rank >= domain_size()) fail(Errc::IndexOutOfRange, "subset rank");
  return colex_unrank(m_, p_, rank)[choice_[rank]];
}

int SubsetSelection::choice(const std::vector<int>& subset) const {
  if (static_cast<int>(subset.size()) != p_)
    fail(Errc::BadParameters, "subset size must be p");
  for (int v : subset)
    if (v < 0 || v >= m_) fail(Errc::IndexOutOfRange, "subset member " + std::to_string(v));
  const std::uint64_t rank = colex_rank(subset);
  return subset[choice_[rank]];
}

Tournament induced_tournament(const SubsetSelection& sel) {
  if (sel.subset_size() != 2)
    fail(Errc::BadParameters, "only pair selections induce a tournament");
  std::vector<Arc> arcs;
  arcs.reserve(sel.domain_size());
  for (std::uint64_t r = 0; r < sel.domain_size(); ++r) {
    const auto pair = sel.subset_at(r);
    const int chosen = sel.choice_at(r);
    // sigma({u,v}) is the beaten element: winner -> chosen
    arcs.emplace_back(pair[0] == chosen ? pair[1] : pair[0], chosen);
  }
  return Tournament::from_arcs(sel.ground_size(), arcs);
}

std::uint64_t KappaProfile::min() const {
  return *std::min_element(counts.begin(), counts.end());
}

std::uint64_t KappaProfile::max() const {
  return *std::max_element(counts.begin(), counts.end());
}

std::vector<int> KappaProfile::min_set() const {
  const std::uint64_t lo = min();
  std::vector<int> out;
  for (std::size_t x = 0; x < counts.size(); ++x)
    if (counts[x] == lo) out.push_back(static_cast<int>(x));
  return out;
}

KappaProfile kappa(const SubsetSelection& sel) {
  KappaProfile prof{std::vector<std::uint64_t>(sel.ground_size(), 0)};
  auto subset = first_subset(sel.subset_size());
  std::uint64_t rank = 0;
  do {
    ++prof.counts[sel.choice(subset)];
    ++rank;
  } while (next_subset(subset, sel.ground_size()));
  if (rank != sel.domain_size()) throw std::logic_error("kappa: subset sweep incomplete");
  return prof;
}

KappaVerdict constant_kappa_precheck(int m, int p) {
  if (p < 2 || p >= m) fail(Errc::BadParameters, "need 2 <= p < m");
  if (binomial(m, p) % static_cast<std::uint64_t>(m) != 0) return KappaVerdict::ImpossibleByCount;
  if (is_prime(p) && m % p == 0) return KappaVerdict::ImpossibleByPrime;
  return KappaVerdict::Candidate;
}

KappaSearchResult search_constant_kappa(int m, int p, std::uint64_t budget) {
  if (p < 2 || p >= m) fail(Errc::BadParameters, "need 2 <= p < m");
  if (p > 255) fail(Errc::TooLarge, "choice positions are stored in one byte");
  const std::uint64_t total = binomial(m, p);
  if (total > (std::uint64_t{1} << 22))
    fail(Errc::TooLarge, "subset table of " + std::to_string(total) + " entries");

  // subsets in colex order, the DFS assignment order
  std::vector<std::vector<int>> subsets;
  subsets.reserve(total);
  auto s = first_subset(p);
  do subsets.push_back(s);
  while (next_subset(s, m));

  const std::int64_t goal = static_cast<std::int64_t>(total);  // target kappa is goal/m
  std::vector<std::int64_t> kap(m, 0);   // chosen so far
  std::vector<std::int64_t> cap(m, 0);   // appearances in unassigned subsets
  for (const auto& sub : subsets)
    for (int x : sub) ++cap[x];

  KappaSearchResult res;
  std::vector<int> pos(total, -1);  // choice position per depth, -1 = untried
  std::uint64_t depth = 0;

  auto pass_subset = [&](std::uint64_t d) {
    for (int y : subsets[d]) --cap[y];
  };
  auto unpass_subset = [&](std::uint64_t d) {
    for (int y : subsets[d]) ++cap[y];
  };
  // every vertex of the subset just passed must still be able to reach goal/m
  auto still_feasible = [&](std::uint64_t d) {
    for (int y : subsets[d])
      if ((kap[y] + cap[y]) * m < goal) return false;
    return true;
  };

  while (true) {
    if (depth == total) {
      if (std::all_of(kap.begin(), kap.end(), [&](std::int64_t k) { return k == kap[0]; })) {
        std::vector<std::uint8_t> choice(total);
        for (std::uint64_t d = 0; d < total; ++d) choice[d] = static_cast<std::uint8_t>(pos[d]);
        res.status = KappaSearchResult::Status::FoundWitness;
        res.witness = SubsetSelection(m, p, std::move(choice));
        return res;
      }
      // fall through to backtrack
    } else {
      // advance the choice at this depth
      bool descended = false;
      for (int q = pos[depth] + 1; q < p; ++q) {
        const int x = subsets[depth][q];
        if ((kap[x] + 1) * m > goal) continue;  // would push kappa past goal/m
        if (res.nodes_visited >= budget) {
          res.status = KappaSearchResult::Status::BudgetExceeded;
          return res;
        }
        ++res.nodes_visited;
        pos[depth] = q;
        ++kap[x];
        pass_subset(depth);
        if (still_feasible(depth)) {
          ++depth;
          descended = true;
          break;
        }
        unpass_subset(depth);
        --kap[x];
      }
      if (descended) continue;
      pos[depth] = -1;
    }
    // backtrack
    if (depth == 0) {
      res.status = KappaSearchResult::Status::ExhaustedNone;
      return res;
    }
    --depth;
    unpass_subset(depth);
    --kap[subsets[depth][pos[depth]]];
  }
}

}  // namespace tourney
