#include "tourney/dominance.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>

#include "tourney/scores.hpp"

namespace tourney {

namespace {

DistanceMatrix bfs_all_sources(int n, const std::function<bool(int, int)>& arc) {
  DistanceMatrix dist(n, std::vector<std::optional<int>>(n));
  std::deque<int> queue;
  for (int src = 0; src < n; ++src) {
    auto& row = dist[src];
    row[src] = 0;
    queue.clear();
    queue.push_back(src);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v)
        if (!row[v] && v != src && arc(u, v)) {
          row[v] = *row[u] + 1;
          queue.push_back(v);
        }
    }
  }
  return dist;
}

std::vector<int> rows_within_two(const DistanceMatrix& dist) {
  std::vector<int> out;
  const int n = static_cast<int>(dist.size());
  for (int v = 0; v < n; ++v) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) ok = dist[v][u].has_value() && *dist[v][u] <= 2;
    if (ok) out.push_back(v);
  }
  return out;
}

}  // namespace

std::optional<int> emperor_of(const Tournament& t) {
  for (int v = 0; v < t.order(); ++v)
    if (score_of(t, v) == t.order() - 1) return v;
  return std::nullopt;
}

DistanceMatrix distance_matrix(const Tournament& t) {
  return bfs_all_sources(t.order(), [&t](int u, int v) { return t.beats(u, v); });
}

DistanceMatrix distance_matrix(const Digraph& d) {
  return bfs_all_sources(d.order(), [&d](int u, int v) { return d.has_arc(u, v); });
}

DominanceReport classify(const Tournament& t) {
  const int n = t.order();
  DominanceReport rep;
  rep.distances = distance_matrix(t);
  rep.kings = rows_within_two(rep.distances);
  if (rep.kings.empty()) throw std::logic_error("classify: king set empty");

  rep.emperor = emperor_of(t);
  if (rep.emperor && rep.kings != std::vector<int>{*rep.emperor})
    throw std::logic_error("classify: emperor present but not the sole king");
  for (int v = 0; v < n; ++v) {
    if (rep.emperor && *rep.emperor == v) continue;
    if (n > 1 && score_of(t, v) == 0)
      rep.slaves.push_back(v);
    else
      rep.serfs.push_back(v);
  }
  if (rep.slaves.size() > 1) throw std::logic_error("classify: more than one slave");
  return rep;
}

std::vector<int> kings_by_max_score(const Tournament& t) {
  int best = 0;
  for (int v = 0; v < t.order(); ++v) best = std::max(best, score_of(t, v));
  std::vector<int> out;
  for (int v = 0; v < t.order(); ++v)
    if (score_of(t, v) == best) out.push_back(v);
  return out;
}

int king_of(const Tournament& t) { return kings_by_max_score(t).front(); }

std::vector<int> deadbeat_witnesses(const Tournament& t) {
  if (t.order() < 3) fail(Errc::TooFewVertices, "deadbeat search needs n >= 3");
  if (emperor_of(t))
    fail(Errc::HasEmperor, "vertex " + std::to_string(*emperor_of(t)) + " beats everyone");
  auto kings = classify(t).kings;
  if (kings.size() < 3) throw std::logic_error("deadbeats: fewer than three kings");
  return kings;
}

std::vector<int> two_stage_communicators(const Digraph& d) {
  const int n = d.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!d.has_arc(u, v) && !d.has_arc(v, u))
        fail(Errc::HypothesisViolated, "pair {" + std::to_string(u) + "," + std::to_string(v) +
                                           "} has no link in either direction");
  auto out = rows_within_two(distance_matrix(d));
  if (out.empty()) throw std::logic_error("two-stage communicator set empty");
  return out;
}

}  // namespace tourney
