#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace dilemma {

/// One available action at a state, together with its nonnegative
/// decision-heuristic score.
template <class ActionIdT>
struct ScoredAction {
  ActionIdT action;
  double score = 0.0;

  friend bool operator==(const ScoredAction&, const ScoredAction&) = default;
};

/// Contract every problem adapter must satisfy.
///
/// scored_actions must be deterministic (same state, same list), sorted by
/// score descending with ties broken by ascending action id, and must be
/// empty only for candidate states. apply must be a pure function of
/// (state, action). energy is defined for candidate states only; lower is
/// better, so adapters encode maximization by negation.
template <class P>
concept Problem = requires(const P p, const typename P::State s, const typename P::ActionId a) {
  typename P::State;
  typename P::ActionId;
  { p.initial_state() } -> std::same_as<typename P::State>;
  { p.scored_actions(s) } -> std::same_as<std::vector<ScoredAction<typename P::ActionId>>>;
  { p.apply(s, a) } -> std::same_as<typename P::State>;
  { p.is_candidate(s) } -> std::same_as<bool>;
  { p.energy(s) } -> std::same_as<double>;
};

/// A state on the search tree: the action path that produced it, the
/// adapter's scored action list, and how many of those actions have been
/// consumed so far. Actions are consumed strictly in score order, so
/// taken_count realizes the taken-action set as a prefix index.
template <class P>
struct SearchNode {
  typename P::State state;
  std::vector<typename P::ActionId> path;
  std::vector<ScoredAction<typename P::ActionId>> actions;
  int depth = 0;
  std::size_t taken_count = 0;

  std::size_t untaken_count() const { return actions.size() - taken_count; }
  bool exhausted() const { return taken_count == actions.size(); }
};

/// Tunables shared by all three engines. assumed_depth / assumed_branching
/// parameterize the uniform-tail probability diagnostic only; the engines
/// themselves never use them.
struct SearchConfig {
  double depth_const = 0.0;   // depth bias of the selection score, >= 0
  double epsilon = 1e-12;     // tie guard of the dilemma estimator, > 0
  std::uint64_t max_iterations = 100;  // revisit iterations after the greedy one
  std::optional<std::int64_t> time_budget_ms;
  std::optional<int> assumed_depth;      // d
  std::optional<int> assumed_branching;  // b >= 2
  std::uint64_t seed = 0;  // random state selection only
};

enum class Algo { kGreedy, kDfs, kRss };

inline const char* algo_name(Algo a) {
  switch (a) {
    case Algo::kGreedy: return "greedy";
    case Algo::kDfs: return "dfs";
    case Algo::kRss: return "rss";
  }
  return "?";
}

/// Identifies the run that produced a trace; serialized as the leading
/// comment line of trace files.
struct TraceHeader {
  Algo algo = Algo::kDfs;
  std::optional<std::uint64_t> seed;  // engaged for rss only
  std::string rng;                    // generator name, empty when not applicable
  double depth_const = 0.0;
  double epsilon = 1e-12;
};

/// One row of the convergence trace. Record 0 is always the greedy
/// candidate; selection_score and heuristic_gap are NaN there (nothing was
/// selected) and serialize as "na".
struct IterationRecord {
  std::int64_t iteration = 0;
  double candidate_energy = 0.0;
  double best_energy = 0.0;
  int selected_depth = 0;
  double selection_score = std::numeric_limits<double>::quiet_NaN();
  double heuristic_gap = std::numeric_limits<double>::quiet_NaN();
  std::int64_t elapsed_ms = 0;
};

struct Trace {
  TraceHeader header;
  std::vector<IterationRecord> records;
};

enum class StopReason { kExhausted, kIterationCap, kTimeBudget };

inline const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::kExhausted: return "exhausted";
    case StopReason::kIterationCap: return "iteration_cap";
    case StopReason::kTimeBudget: return "time_budget";
  }
  return "?";
}

template <Problem P>
struct SearchResult {
  typename P::State best_state;
  std::vector<typename P::ActionId> best_path;
  double best_energy = 0.0;
  std::int64_t best_iteration = 0;
  Trace trace;
  StopReason reason = StopReason::kExhausted;
};

/// Per-iteration snapshot handed to an optional observer. Fired for the
/// greedy iteration 0 as well (with an empty selected path and NaN scores).
template <Problem P>
struct IterationEvent {
  std::int64_t iteration = 0;
  std::vector<typename P::ActionId> selected_path;
  int selected_depth = 0;
  double selection_score = std::numeric_limits<double>::quiet_NaN();
  double heuristic_gap = std::numeric_limits<double>::quiet_NaN();
  std::vector<typename P::ActionId> candidate_path;
  double candidate_energy = 0.0;
};

}  // namespace dilemma
