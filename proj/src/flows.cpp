#include "tourney/flows.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tourney {

Flow Flow::zero(int n) {
  if (n < 1) fail(Errc::ZeroVertices, "flow needs at least one vertex");
  return Flow(n, std::vector<long long>(pair_count(n), 0));
}

Flow Flow::from_upper(int n, std::vector<long long> upper) {
  if (n < 1) fail(Errc::ZeroVertices, "flow needs at least one vertex");
  if (static_cast<int>(upper.size()) != pair_count(n))
    fail(Errc::BadParameters, "expected one value per unordered pair");
  return Flow(n, std::move(upper));
}

Flow Flow::from_values(int n, const std::vector<std::tuple<int, int, long long>>& values) {
  if (n < 1) fail(Errc::ZeroVertices, "flow needs at least one vertex");
  const int p = pair_count(n);
  std::vector<long long> upper(p, 0);
  // 0 = unset, 1 = upper set, 2 = lower set, 3 = both
  std::vector<std::uint8_t> seen(p, 0);
  for (const auto& [x, y, val] : values) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      fail(Errc::IndexOutOfRange, "pair endpoint outside [0," + std::to_string(n) + ")");
    if (x == y) fail(Errc::SelfArc, "flow value on a loop");
    const int k = pair_index(std::min(x, y), std::max(x, y));
    const long long as_upper = x < y ? val : -val;
    if (seen[k] != 0 && upper[k] != as_upper)
      fail(Errc::BadParameters, "antisymmetry violated on pair {" +
                                    std::to_string(std::min(x, y)) + "," +
                                    std::to_string(std::max(x, y)) + "}");
    upper[k] = as_upper;
    seen[k] |= (x < y) ? 1 : 2;
  }
  for (int k = 0; k < p; ++k)
    if (seen[k] == 0) fail(Errc::MissingPair, "pair index " + std::to_string(k) + " unassigned");
  return Flow(n, std::move(upper));
}

long long Flow::value(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_)
    fail(Errc::IndexOutOfRange, "vertex outside [0," + std::to_string(n_) + ")");
  if (x == y) fail(Errc::SelfArc, "no value on a loop");
  return x < y ? upper_[pair_index(x, y)] : -upper_[pair_index(y, x)];
}

SelectionFlow::SelectionFlow(Flow f) : flow_(std::move(f)) {
  for (int y = 1; y < flow_.order(); ++y)
    for (int x = 0; x < y; ++x)
      if (std::llabs(flow_.value(x, y)) != 1)
        fail(Errc::BadParameters, "selection flow values must be +1 or -1");
}

SelectionFlow selection_flow(const Tournament& t) {
  const int n = t.order();
  std::vector<long long> upper(pair_count(n));
  for (int y = 1; y < n; ++y)
    for (int x = 0; x < y; ++x)
      // value(x,y) = +1 iff x <_sigma y iff y beats x
      upper[pair_index(x, y)] = t.beats(y, x) ? 1 : -1;
  return SelectionFlow(Flow::from_upper(n, std::move(upper)));
}

Tournament induced_tournament(const SelectionFlow& f) {
  const int n = f.order();
  std::vector<Arc> arcs;
  arcs.reserve(pair_count(n));
  for (int y = 1; y < n; ++y)
    for (int x = 0; x < y; ++x)
      arcs.emplace_back(f.value(x, y) == 1 ? Arc{y, x} : Arc{x, y});
  return Tournament::from_arcs(n, arcs);
}

long long total_flow(const Flow& f, int a) {
  if (a < 0 || a >= f.order())
    fail(Errc::IndexOutOfRange, "vertex " + std::to_string(a));
  long long phi = 0;
  for (int b = 0; b < f.order(); ++b)
    if (b != a) phi += f.value(a, b);
  return phi;
}

long long total_flow(const SelectionFlow& f, int a) { return total_flow(f.flow(), a); }

long long flow_sum(const Flow& f) {
  long long sum = 0;
  for (int a = 0; a < f.order(); ++a) sum += total_flow(f, a);
  if (sum != 0) throw std::logic_error("flow_sum: antisymmetric flow summed to nonzero");
  return sum;
}

long long flow_sum(const SelectionFlow& f) { return flow_sum(f.flow()); }

K4Class k4_dichotomy(const SelectionFlow& f) {
  if (f.order() != 4) fail(Errc::WrongOrder, "dichotomy is a K_4 statement");
  bool any_three = false, all_unit = true;
  for (int a = 0; a < 4; ++a) {
    const long long phi = std::llabs(total_flow(f, a));
    if (phi == 3) any_three = true;
    if (phi != 1) all_unit = false;
  }
  if (any_three == all_unit) throw std::logic_error("k4_dichotomy: cases not exclusive");
  return any_three ? K4Class::EmperorLike : K4Class::AllUnit;
}

EvenPartition even_partition(const Tournament& t) {
  const int n = t.order();
  if (n < 4 || n % 2 != 0)
    fail(Errc::WrongOrder, "partition needs an even order of at least 4");
  const SelectionFlow f = selection_flow(t);
  EvenPartition part;
  for (int a = 0; a < n; ++a) {
    const long long phi = total_flow(f, a);
    if (phi == 0) throw std::logic_error("even_partition: phi = 0 on an even order");
    (phi > 0 ? part.positive : part.negative).push_back(a);
  }
  if (part.positive.empty() || part.negative.empty())
    throw std::logic_error("even_partition: a side is empty");
  return part;
}

}  // namespace tourney
