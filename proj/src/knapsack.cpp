#include "dilemma/knapsack.hpp"

#include <algorithm>

#include "dilemma/errors.hpp"

namespace dilemma::knapsack {

double ks_heuristic(const Item& item, std::int64_t used_weight, std::int64_t capacity) {
  if (used_weight + item.weight > capacity) return 0.0;
  return static_cast<double>(item.value) / static_cast<double>(item.weight);
}

KnapsackProblem::KnapsackProblem(KnapsackInstance instance) : instance_(std::move(instance)) {
  if (instance_.capacity < 1) throw DomainError("capacity must be >= 1");
  for (std::size_t i = 0; i < instance_.items.size(); ++i) {
    const Item& item = instance_.items[i];
    if (item.id != static_cast<int>(i)) throw DomainError("item ids must be dense from 0");
    if (item.weight < 1) throw DomainError("item weight must be >= 1");
    if (item.value < 0) throw DomainError("item value must be >= 0");
  }
}

KnapsackState KnapsackProblem::initial_state() const {
  KnapsackState s;
  s.in_knapsack.assign(instance_.items.size(), false);
  return s;
}

std::vector<ScoredAction<int>> KnapsackProblem::scored_actions(const KnapsackState& state) const {
  std::vector<ScoredAction<int>> actions;
  for (const Item& item : instance_.items) {
    if (state.in_knapsack[static_cast<std::size_t>(item.id)]) continue;
    if (state.used_weight + item.weight > instance_.capacity) continue;
    actions.push_back({item.id, ks_heuristic(item, state.used_weight, instance_.capacity)});
  }
  std::sort(actions.begin(), actions.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.action < b.action;
  });
  return actions;
}

KnapsackState KnapsackProblem::apply(const KnapsackState& state, int item_id) const {
  if (item_id < 0 || item_id >= static_cast<int>(instance_.items.size()))
    throw IllegalActionError("unknown item id " + std::to_string(item_id));
  if (state.in_knapsack[static_cast<std::size_t>(item_id)])
    throw IllegalActionError("item " + std::to_string(item_id) + " already selected");
  const Item& item = instance_.items[static_cast<std::size_t>(item_id)];
  if (state.used_weight + item.weight > instance_.capacity)
    throw IllegalActionError("item " + std::to_string(item_id) + " does not fit");
  KnapsackState next = state;
  next.selected.push_back(item_id);
  next.in_knapsack[static_cast<std::size_t>(item_id)] = true;
  next.used_weight += item.weight;
  next.total_value += item.value;
  return next;
}

bool KnapsackProblem::is_candidate(const KnapsackState& state) const {
  for (const Item& item : instance_.items) {
    if (state.in_knapsack[static_cast<std::size_t>(item.id)]) continue;
    if (state.used_weight + item.weight <= instance_.capacity) return false;
  }
  return true;
}

double KnapsackProblem::energy(const KnapsackState& state) const {
  if (!is_candidate(state)) throw NotCandidateError("some item still fits");
  return -static_cast<double>(state.total_value);
}

KnapsackState greedy_solution(const KnapsackInstance& instance) {
  KnapsackState s;
  s.in_knapsack.assign(instance.items.size(), false);
  while (true) {
    int pick = -1;
    double pick_ratio = -1.0;
    for (const Item& item : instance.items) {
      if (s.in_knapsack[static_cast<std::size_t>(item.id)]) continue;
      if (s.used_weight + item.weight > instance.capacity) continue;
      const double ratio = static_cast<double>(item.value) / static_cast<double>(item.weight);
      // Ascending id order makes ">" keep the lowest id on ratio ties.
      if (ratio > pick_ratio) {
        pick = item.id;
        pick_ratio = ratio;
      }
    }
    if (pick < 0) break;
    const Item& item = instance.items[static_cast<std::size_t>(pick)];
    s.selected.push_back(pick);
    s.in_knapsack[static_cast<std::size_t>(pick)] = true;
    s.used_weight += item.weight;
    s.total_value += item.value;
  }
  return s;
}

std::int64_t ks_dp_oracle(const KnapsackInstance& instance, std::int64_t max_cells) {
  const auto n = static_cast<std::int64_t>(instance.items.size());
  const std::int64_t width = instance.capacity + 1;
  if (n > 0 && (width > max_cells / n || width > 20'000'000))
    throw CapacityOverflowError("DP table of " + std::to_string(n) + "x" + std::to_string(width) +
                                " cells exceeds the configured limit");
  std::vector<std::int64_t> best(static_cast<std::size_t>(width), 0);
  for (const Item& item : instance.items) {
    for (std::int64_t w = instance.capacity; w >= item.weight; --w) {
      const std::int64_t with_item = best[static_cast<std::size_t>(w - item.weight)] + item.value;
      if (with_item > best[static_cast<std::size_t>(w)])
        best[static_cast<std::size_t>(w)] = with_item;
    }
  }
  return best[static_cast<std::size_t>(instance.capacity)];
}

std::int64_t ks_brute_force_oracle(const KnapsackInstance& instance) {
  const std::size_t n = instance.items.size();
  if (n > 24) throw TooLargeError("brute force limited to n <= 24, got " + std::to_string(n));
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t weight = 0;
    std::int64_t value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        weight += instance.items[i].weight;
        value += instance.items[i].value;
      }
    }
    if (weight <= instance.capacity && value > best) best = value;
  }
  return best;
}

}  // namespace dilemma::knapsack
