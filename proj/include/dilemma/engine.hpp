#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "dilemma/errors.hpp"
#include "dilemma/queue.hpp"
#include "dilemma/scoring.hpp"
#include "dilemma/types.hpp"

namespace dilemma {

template <Problem P>
using SearchObserver = std::function<void(const IterationEvent<P>&)>;

namespace detail {

/// Gap used for a queue entry, always taken from the node's untaken actions
/// at the moment it is enqueued: best untaken minus second-best untaken, or
/// minus 0 when a single action remains.
template <Problem P>
double entry_gap(const SearchNode<P>& node) {
  const double f_best = node.actions[node.taken_count].score;
  const double f_second =
      node.taken_count + 1 < node.actions.size() ? node.actions[node.taken_count + 1].score : 0.0;
  return f_best - f_second;
}

template <Problem P>
void enqueue(DilemmaQueue<P>& queue, SearchNode<P> node, double gap, const SearchConfig& config) {
  const double score = gap - static_cast<double>(node.depth) * config.depth_const;
  queue.push(score, gap, std::move(node));
}

template <Problem P>
void fill_actions(const P& adapter, SearchNode<P>& node) {
  if (node.actions.empty()) node.actions = adapter.scored_actions(node.state);
  if (node.actions.empty())
    throw AdapterError("non-candidate state reported no actions (adapter contract violation)");
  if (node.exhausted())
    throw AdapterError("rollout requested from an exhausted state");
}

inline void validate(const SearchConfig& config) {
  if (config.max_iterations == 0) throw BudgetZeroError("max_iterations must be >= 1");
  if (config.depth_const < 0.0) throw DomainError("depth_const must be >= 0");
  if (!(config.epsilon > 0.0)) throw DomainError("epsilon must be > 0");
  if (config.assumed_branching && *config.assumed_branching < 2)
    throw DomainError("assumed branching factor must be >= 2");
  if (config.assumed_depth && *config.assumed_depth < 1)
    throw DomainError("assumed depth must be >= 1");
}

}  // namespace detail

template <Problem P>
struct RolloutOutcome {
  SearchNode<P> candidate;  // actions left empty; state and path are set
  double energy = 0.0;
  std::size_t nodes_created = 0;
  std::size_t nodes_enqueued = 0;
  bool start_requeued = false;
};

/// Greedy candidate search from `start`: repeatedly consumes the
/// highest-scored untaken action until the first candidate state.
///
/// Queue bookkeeping along the walk:
///   - every newly created non-candidate child with at least two actions is
///     filed into `queue`, scored by the gap between its top two actions
///     (the dilemma of the decision the rollout makes there);
///   - single-action children are never filed (no alternative exists);
///   - `start` itself is re-filed after the walk iff it still has untaken
///     actions, scored from its remaining untaken pair.
///
/// A `start` that is already a candidate is returned as-is. Throws
/// AdapterError when a non-candidate state reports no actions.
template <Problem P>
RolloutOutcome<P> greedy_rollout(const P& adapter, SearchNode<P> start, DilemmaQueue<P>& queue,
                                 const SearchConfig& config) {
  RolloutOutcome<P> out;
  if (adapter.is_candidate(start.state)) {
    out.energy = adapter.energy(start.state);
    out.candidate = std::move(start);
    out.candidate.actions.clear();
    return out;
  }
  detail::fill_actions(adapter, start);

  SearchNode<P> local;          // current interior node once we leave `start`
  SearchNode<P>* cur = &start;  // node whose action is consumed next
  bool at_start = true;
  while (true) {
    const auto action = cur->actions[cur->taken_count].action;
    ++cur->taken_count;

    SearchNode<P> child;
    child.state = adapter.apply(cur->state, action);
    child.path = cur->path;
    child.path.push_back(action);
    child.depth = cur->depth + 1;
    ++out.nodes_created;

    const bool child_is_candidate = adapter.is_candidate(child.state);
    if (!child_is_candidate) {
      child.actions = adapter.scored_actions(child.state);
      if (child.actions.empty())
        throw AdapterError("non-candidate state reported no actions (adapter contract violation)");
    }

    // Leaving `cur`: interior nodes with a real alternative join the queue,
    // scored by the top-two gap of the decision just taken.
    if (!at_start && cur->actions.size() >= 2) {
      const double gap = cur->actions[0].score - cur->actions[1].score;
      detail::enqueue(queue, std::move(*cur), gap, config);
      ++out.nodes_enqueued;
    }

    if (child_is_candidate) {
      out.energy = adapter.energy(child.state);
      out.candidate = std::move(child);
      break;
    }
    local = std::move(child);
    cur = &local;
    at_start = false;
  }

  if (!start.exhausted()) {
    const double gap = detail::entry_gap(start);
    detail::enqueue(queue, std::move(start), gap, config);
    ++out.nodes_enqueued;
    out.start_requeued = true;
  }
  return out;
}

namespace detail {

template <Problem P>
class BestTracker {
 public:
  void offer(const SearchNode<P>& candidate, double energy, std::int64_t iteration) {
    if (!has_ || energy < best_energy_) {
      has_ = true;
      best_energy_ = energy;
      best_iteration_ = iteration;
      best_state_ = candidate.state;
      best_path_ = candidate.path;
    }
  }

  double energy() const { return best_energy_; }
  std::int64_t iteration() const { return best_iteration_; }
  typename P::State take_state() { return std::move(best_state_); }
  std::vector<typename P::ActionId> take_path() { return std::move(best_path_); }

 private:
  bool has_ = false;
  double best_energy_ = 0.0;
  std::int64_t best_iteration_ = 0;
  typename P::State best_state_{};
  std::vector<typename P::ActionId> best_path_;
};

/// Shared engine loop. `pop` decides which queue entry to revisit; everything
/// else (rollout, re-filing, termination, trace) is identical across engines.
template <Problem P, class Pop>
SearchResult<P> run_search(const P& adapter, const SearchConfig& config, TraceHeader header,
                           Pop&& pop, const SearchObserver<P>& observer) {
  validate(config);
  const auto t_start = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&t_start] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t_start)
        .count();
  };

  SearchResult<P> result;
  result.trace.header = std::move(header);

  SearchNode<P> root;
  root.state = adapter.initial_state();

  DilemmaQueue<P> queue;
  BestTracker<P> best;

  // Iteration 0: the greedy solution. A root that is already a candidate is
  // a degenerate but valid problem (single-record trace).
  auto rollout = greedy_rollout(adapter, std::move(root), queue, config);
  best.offer(rollout.candidate, rollout.energy, 0);
  result.trace.records.push_back(IterationRecord{
      0, rollout.energy, best.energy(), 0, std::numeric_limits<double>::quiet_NaN(),
      std::numeric_limits<double>::quiet_NaN(), elapsed_ms()});
  if (observer) {
    IterationEvent<P> ev;
    ev.iteration = 0;
    ev.candidate_path = rollout.candidate.path;
    ev.candidate_energy = rollout.energy;
    observer(ev);
  }

  std::uint64_t iteration = 0;
  bool out_of_time = false;
  while (iteration < config.max_iterations && !queue.empty()) {
    if (config.time_budget_ms && elapsed_ms() >= *config.time_budget_ms) {
      out_of_time = true;
      break;
    }
    ++iteration;

    auto entry = pop(queue);
    SearchNode<P> node = std::move(entry.node);
    const int selected_depth = node.depth;
    std::vector<typename P::ActionId> selected_path;
    if (observer) selected_path = node.path;

    // Switch the dilemma state to its best untaken action, then re-file it
    // if alternatives remain, scored from the next untaken pair.
    const auto action = node.actions[node.taken_count].action;
    ++node.taken_count;

    SearchNode<P> child;
    child.state = adapter.apply(node.state, action);
    child.path = node.path;
    child.path.push_back(action);
    child.depth = node.depth + 1;

    if (!node.exhausted()) {
      const double gap = entry_gap(node);
      enqueue(queue, std::move(node), gap, config);
    }

    auto iter_rollout = greedy_rollout(adapter, std::move(child), queue, config);
    best.offer(iter_rollout.candidate, iter_rollout.energy, static_cast<std::int64_t>(iteration));
    result.trace.records.push_back(IterationRecord{
        static_cast<std::int64_t>(iteration), iter_rollout.energy, best.energy(), selected_depth,
        entry.score, entry.gap, elapsed_ms()});
    if (observer) {
      IterationEvent<P> ev;
      ev.iteration = static_cast<std::int64_t>(iteration);
      ev.selected_path = std::move(selected_path);
      ev.selected_depth = selected_depth;
      ev.selection_score = entry.score;
      ev.heuristic_gap = entry.gap;
      ev.candidate_path = iter_rollout.candidate.path;
      ev.candidate_energy = iter_rollout.energy;
      observer(ev);
    }
  }

  result.reason = queue.empty() ? StopReason::kExhausted
                 : out_of_time  ? StopReason::kTimeBudget
                                : StopReason::kIterationCap;
  result.best_energy = best.energy();
  result.best_iteration = best.iteration();
  result.best_state = best.take_state();
  result.best_path = best.take_path();
  return result;
}

}  // namespace detail

/// Dilemma-first search: iteration 0 is the greedy solution; every further
/// iteration revisits the queued state with the minimum selection score,
/// switches it to its best untaken action and regrows greedily. Fully
/// deterministic.
template <Problem P>
SearchResult<P> dfs_search(const P& adapter, const SearchConfig& config,
                           const SearchObserver<P>& observer = {}) {
  TraceHeader header;
  header.algo = Algo::kDfs;
  header.depth_const = config.depth_const;
  header.epsilon = config.epsilon;
  return detail::run_search(
      adapter, config, std::move(header), [](DilemmaQueue<P>& q) { return q.pop_min(); },
      observer);
}

/// Random state selection: identical machinery to dfs_search except that the
/// revisited state is drawn uniformly among queue entries with a seeded
/// mt19937_64. The draw picks the k-th oldest entry (by insertion counter),
/// which keeps runs reproducible independent of heap layout.
template <Problem P>
SearchResult<P> rss_search(const P& adapter, const SearchConfig& config,
                           const SearchObserver<P>& observer = {}) {
  TraceHeader header;
  header.algo = Algo::kRss;
  header.seed = config.seed;
  header.rng = "mt19937_64";
  header.depth_const = config.depth_const;
  header.epsilon = config.epsilon;
  std::mt19937_64 rng(config.seed);
  std::vector<std::uint64_t> counters;
  auto pop_random = [&rng, &counters](DilemmaQueue<P>& q) {
    const std::size_t rank = static_cast<std::size_t>(rng() % q.size());
    // Index of the entry holding the rank-th smallest insertion counter.
    counters.clear();
    for (const auto& e : q.entries()) counters.push_back(e.counter);
    std::nth_element(counters.begin(), counters.begin() + static_cast<std::ptrdiff_t>(rank),
                     counters.end());
    const std::uint64_t target = counters[rank];
    std::size_t chosen = 0;
    for (std::size_t i = 0; i < q.entries().size(); ++i) {
      if (q.entries()[i].counter == target) {
        chosen = i;
        break;
      }
    }
    return q.pop_index(chosen);
  };
  return detail::run_search(adapter, config, std::move(header), pop_random, observer);
}

/// Standalone greedy run: exactly iteration 0 of dfs_search.
template <Problem P>
SearchResult<P> greedy_search(const P& adapter, const SearchConfig& config,
                              const SearchObserver<P>& observer = {}) {
  detail::validate(config);
  const auto t_start = std::chrono::steady_clock::now();

  SearchResult<P> result;
  result.trace.header.algo = Algo::kGreedy;
  result.trace.header.depth_const = config.depth_const;
  result.trace.header.epsilon = config.epsilon;

  SearchNode<P> root;
  root.state = adapter.initial_state();
  DilemmaQueue<P> queue;
  auto rollout = greedy_rollout(adapter, std::move(root), queue, config);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t_start)
                           .count();
  result.trace.records.push_back(IterationRecord{0, rollout.energy, rollout.energy, 0,
                                                 std::numeric_limits<double>::quiet_NaN(),
                                                 std::numeric_limits<double>::quiet_NaN(), elapsed});
  if (observer) {
    IterationEvent<P> ev;
    ev.iteration = 0;
    ev.candidate_path = rollout.candidate.path;
    ev.candidate_energy = rollout.energy;
    observer(ev);
  }
  result.best_energy = rollout.energy;
  result.best_iteration = 0;
  result.best_path = rollout.candidate.path;
  result.best_state = std::move(rollout.candidate.state);
  result.reason = queue.empty() ? StopReason::kExhausted : StopReason::kIterationCap;
  return result;
}

}  // namespace dilemma
