#include "tourney/scores.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tourney {

ScoreSequence::ScoreSequence(std::vector<int> scores) : scores_(std::move(scores)) {
  std::sort(scores_.begin(), scores_.end());
  const int n = static_cast<int>(scores_.size());
  for (int s : scores_)
    if (s < 0 || s > n - 1)
      fail(Errc::InvalidScore,
           "entry " + std::to_string(s) + " outside [0," + std::to_string(n - 1) + "]");
}

long long ScoreSequence::sum() const {
  return std::accumulate(scores_.begin(), scores_.end(), 0LL);
}

int score_of(const Tournament& t, int v) {
  if (v < 0 || v >= t.order())
    fail(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
  int s = 0;
  for (int u = 0; u < t.order(); ++u)
    if (u != v && t.beats(v, u)) ++s;
  return s;
}

int indegree_of(const Tournament& t, int v) {
  if (v < 0 || v >= t.order())
    fail(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
  return t.order() - 1 - score_of(t, v);
}

ScoreSequence score_sequence(const Tournament& t) {
  std::vector<int> s(t.order());
  for (int v = 0; v < t.order(); ++v) s[v] = score_of(t, v);
  return ScoreSequence(std::move(s));
}

std::optional<std::string> landau_violation(const ScoreSequence& seq) {
  const int n = seq.size();
  if (n == 0) return "empty sequence";
  const auto& s = seq.values();
  long long prefix = 0;
  for (int k = 1; k < n; ++k) {
    prefix += s[k - 1];
    const long long need = static_cast<long long>(k) * (k - 1) / 2;
    if (prefix < need)
      return "prefix sum at k=" + std::to_string(k) + " is " + std::to_string(prefix) +
             ", needs at least " + std::to_string(need);
  }
  prefix += s[n - 1];
  const long long total = static_cast<long long>(n) * (n - 1) / 2;
  if (prefix != total)
    return "sum is " + std::to_string(prefix) + ", must be " + std::to_string(total);
  return std::nullopt;
}

bool landau_check(const ScoreSequence& seq) { return !landau_violation(seq).has_value(); }

Tournament realize(const ScoreSequence& seq) {
  if (auto why = landau_violation(seq))
    fail(Errc::NotRealizable, *why);
  const int n = seq.size();

  struct Slot {
    int req;
    int vertex;
  };
  std::vector<Slot> active;
  active.reserve(n);
  for (int i = 0; i < n; ++i) active.push_back({seq.values()[i], i});

  std::vector<Arc> arcs;
  arcs.reserve(pair_count(n));
  while (!active.empty()) {
    std::sort(active.begin(), active.end(),
              [](const Slot& a, const Slot& b) {
                return a.req != b.req ? a.req < b.req : a.vertex < b.vertex;
              });
    // winner: largest requirement, lowest vertex among ties
    std::size_t wpos = active.size() - 1;
    while (wpos > 0 && active[wpos - 1].req == active.back().req) --wpos;
    const Slot w = active[wpos];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(wpos));

    if (w.req > static_cast<int>(active.size()))
      throw std::logic_error("realize: requirement exceeds remaining field");
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (static_cast<int>(i) < w.req) {
        arcs.emplace_back(w.vertex, active[i].vertex);
      } else {
        arcs.emplace_back(active[i].vertex, w.vertex);
        if (--active[i].req < 0) throw std::logic_error("realize: requirement went negative");
      }
    }
  }
  Tournament t = Tournament::from_arcs(n, arcs);
  if (score_sequence(t) != seq) throw std::logic_error("realize: score sequence mismatch");
  return t;
}

}  // namespace tourney
