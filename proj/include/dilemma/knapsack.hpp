#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dilemma/types.hpp"

namespace dilemma::knapsack {

struct Item {
  int id = 0;
  std::int64_t value = 0;   // >= 0
  std::int64_t weight = 1;  // >= 1

  friend bool operator==(const Item&, const Item&) = default;
};

struct KnapsackInstance {
  std::vector<Item> items;  // ids dense, 0..n-1
  std::int64_t capacity = 1;

  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;
};

/// A feasible partial packing. `selected` is the action path (insertion
/// order matters for the search tree); `in_knapsack` mirrors it as a
/// membership mask.
struct KnapsackState {
  std::vector<int> selected;
  std::vector<bool> in_knapsack;
  std::int64_t used_weight = 0;
  std::int64_t total_value = 0;
};

/// Value-per-weight decision heuristic: v/w when the item still fits on top
/// of `used_weight`, 0 otherwise.
double ks_heuristic(const Item& item, std::int64_t used_weight, std::int64_t capacity);

class KnapsackProblem {
 public:
  using State = KnapsackState;
  using ActionId = int;

  explicit KnapsackProblem(KnapsackInstance instance);

  State initial_state() const;

  /// Fitting unselected items only, ratio-descending, ties by ascending id.
  /// Zero-value fitting items are included (score 0); non-fitting items are
  /// not actions at all. Empty exactly when the state is a candidate.
  std::vector<ScoredAction<int>> scored_actions(const State& state) const;

  State apply(const State& state, int item_id) const;

  /// True iff no remaining item fits (a maximal packing).
  bool is_candidate(const State& state) const;

  /// Negated total value; the minimizing engine then maximizes value.
  double energy(const State& state) const;

  const KnapsackInstance& instance() const { return instance_; }

 private:
  KnapsackInstance instance_;
};

/// Direct greedy packing (max ratio first, ties by id, until nothing fits).
/// Written independently of the search engine so it can serve as the
/// greedy-equivalence oracle.
KnapsackState greedy_solution(const KnapsackInstance& instance);

/// Exact optimum via the classic O(n*W) value table. Throws
/// CapacityOverflowError when n*(W+1) exceeds `max_cells`.
std::int64_t ks_dp_oracle(const KnapsackInstance& instance,
                          std::int64_t max_cells = 100'000'000);

/// Exact optimum by enumerating all 2^n subsets; independent of the DP.
/// Throws TooLargeError for n > 24.
std::int64_t ks_brute_force_oracle(const KnapsackInstance& instance);

}  // namespace dilemma::knapsack
