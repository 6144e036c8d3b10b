#pragma once

#include <vector>

#include "dilemma/errors.hpp"
#include "dilemma/types.hpp"

namespace dilemma {

/// Exhaustively walks the full search tree an adapter spans and calls
/// `visit(path, state)` once per candidate leaf. Intended as an independent
/// verification oracle; callers are responsible for keeping the tree small.
template <Problem P, class Visitor>
void enumerate_candidates(const P& adapter, Visitor&& visit) {
  using ActionId = typename P::ActionId;
  std::vector<ActionId> path;
  auto recurse = [&](auto&& self, const typename P::State& state) -> void {
    if (adapter.is_candidate(state)) {
      visit(const_cast<const std::vector<ActionId>&>(path), state);
      return;
    }
    const auto actions = adapter.scored_actions(state);
    if (actions.empty())
      throw AdapterError("non-candidate state reported no actions (adapter contract violation)");
    for (const auto& a : actions) {
      path.push_back(a.action);
      self(self, adapter.apply(state, a.action));
      path.pop_back();
    }
  };
  recurse(recurse, adapter.initial_state());
}

}  // namespace dilemma
