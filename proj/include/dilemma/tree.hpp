#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <vector>

#include "dilemma/dataset.hpp"
#include "dilemma/types.hpp"

namespace dilemma::tree {

/// Stopping rule for tree growth; a frontier node is sealed as a leaf when
/// its depth reaches max_depth, its entropy drops to min_entropy or below,
/// it holds fewer than min_rows rows, or no unused attribute remains.
struct SplitConfig {
  int max_depth = 8;
  double min_entropy = 0.0;
  int min_rows = 1;
};

struct TreeNode {
  int attribute = -1;          // -1 for leaves
  std::vector<int> children;   // one per attribute value, node ids
  int majority_class = 0;      // training majority at this node (also the
                               // fall-through class for unseen values)

  bool is_leaf() const { return attribute < 0; }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  friend bool operator==(const Tree&, const Tree&) = default;
};

/// An open (not yet decided) node awaiting a split or sealing.
struct OpenNode {
  int node_id = 0;
  int ordinal = 0;  // creation order among open nodes
  int depth = 0;
  std::uint64_t used_attributes = 0;  // bitmask over schema indices
  std::vector<std::size_t> rows;      // training rows reaching this node
};

/// A partially built tree plus its FIFO frontier of open nodes. States
/// produced by the adapter are always normalized: every node that the
/// stopping rule would seal has already been sealed, so the frontier is
/// either empty (candidate) or fronted by a splittable node.
struct TreeState {
  Tree tree;
  std::deque<OpenNode> frontier;
  std::vector<std::pair<int, int>> action_path;  // (open-node ordinal, attribute)
  int next_ordinal = 0;
};

int classify_row(const Tree& tree, const std::vector<int>& row);

/// Misclassification count of `tree` over the given rows of `data`.
std::int64_t misclassifications(const Tree& tree, const Dataset& data,
                                std::span<const std::size_t> rows);

/// Decision-tree induction as a search problem: an action selects the split
/// attribute for the front frontier node; the energy of a finished tree is
/// its misclassification count on a validation set disjoint from training.
class TreeProblem {
 public:
  using State = TreeState;
  using ActionId = int;  // attribute index

  /// `train_rows` and `val_rows` index into `data` and must be disjoint and
  /// nonempty; overlap is a contract violation, not a silent result.
  TreeProblem(Dataset data, std::vector<std::size_t> train_rows,
              std::vector<std::size_t> val_rows, SplitConfig config = {});

  State initial_state() const;

  /// One action per unused-on-path attribute of the front frontier node,
  /// scored by information gain (clamped at 0), descending, ties by schema
  /// order.
  std::vector<ScoredAction<int>> scored_actions(const State& state) const;

  State apply(const State& state, int attribute) const;

  bool is_candidate(const State& state) const { return state.frontier.empty(); }

  /// Validation misclassifications of a complete tree.
  double energy(const State& state) const;

  const Dataset& data() const { return *data_; }
  const SplitConfig& config() const { return config_; }
  const std::vector<std::size_t>& train_rows() const { return train_rows_; }
  const std::vector<std::size_t>& val_rows() const { return val_rows_; }

 private:
  bool should_seal(const OpenNode& node) const;
  void normalize(State& state) const;
  int majority_of(std::span<const std::size_t> rows) const;

  std::shared_ptr<const Dataset> data_;
  std::vector<std::size_t> train_rows_;
  std::vector<std::size_t> val_rows_;
  SplitConfig config_;
};

/// Plain ID3 induction: always split the front node on the max-gain unused
/// attribute (ties by schema order) under the same stopping rule. Built
/// directly, without the search engine, so it can serve as the
/// iteration-zero oracle. When `split_log` is given, it receives the
/// (ordinal, attribute) decisions in order.
Tree id3_build(const Dataset& data, std::span<const std::size_t> train_rows, SplitConfig config,
               std::vector<std::pair<int, int>>* split_log = nullptr);

}  // namespace dilemma::tree
