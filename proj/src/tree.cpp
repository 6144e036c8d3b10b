#include "dilemma/tree.hpp"

#include <algorithm>

#include "dilemma/errors.hpp"

namespace dilemma::tree {

int classify_row(const Tree& tree, const std::vector<int>& row) {
  int node_id = 0;
  while (!tree.nodes[static_cast<std::size_t>(node_id)].is_leaf()) {
    const TreeNode& node = tree.nodes[static_cast<std::size_t>(node_id)];
    node_id = node.children[static_cast<std::size_t>(row[static_cast<std::size_t>(node.attribute)])];
  }
  return tree.nodes[static_cast<std::size_t>(node_id)].majority_class;
}

std::int64_t misclassifications(const Tree& tree, const Dataset& data,
                                std::span<const std::size_t> rows) {
  std::int64_t wrong = 0;
  for (auto r : rows)
    if (classify_row(tree, data.rows[r]) != data.labels[r]) ++wrong;
  return wrong;
}

TreeProblem::TreeProblem(Dataset data, std::vector<std::size_t> train_rows,
                         std::vector<std::size_t> val_rows, SplitConfig config)
    : data_(std::make_shared<const Dataset>(std::move(data))),
      train_rows_(std::move(train_rows)),
      val_rows_(std::move(val_rows)),
      config_(config) {
  if (train_rows_.empty()) throw DomainError("training set is empty");
  if (val_rows_.empty()) throw DomainError("validation set is empty");
  if (data_->attributes.size() > 64) throw TooLargeError("at most 64 attributes supported");
  if (config_.max_depth < 1) throw DomainError("max_depth must be >= 1");
  if (config_.min_rows < 1) throw DomainError("min_rows must be >= 1");
  if (config_.min_entropy < 0.0) throw DomainError("min_entropy must be >= 0");
  for (auto r : train_rows_)
    if (r >= data_->row_count()) throw DomainError("training row index out of range");
  for (auto r : val_rows_)
    if (r >= data_->row_count()) throw DomainError("validation row index out of range");
  std::vector<std::size_t> sorted_train = train_rows_;
  std::vector<std::size_t> sorted_val = val_rows_;
  std::sort(sorted_train.begin(), sorted_train.end());
  std::sort(sorted_val.begin(), sorted_val.end());
  std::vector<std::size_t> overlap;
  std::set_intersection(sorted_train.begin(), sorted_train.end(), sorted_val.begin(),
                        sorted_val.end(), std::back_inserter(overlap));
  if (!overlap.empty())
    throw DomainError("validation rows overlap training rows (" + std::to_string(overlap.size()) +
                      " shared)");
}

int TreeProblem::majority_of(std::span<const std::size_t> rows) const {
  std::vector<std::int64_t> counts(data_->classes.size(), 0);
  for (auto r : rows) ++counts[static_cast<std::size_t>(data_->labels[r])];
  // Ties resolve to the smallest class index; classes are name-sorted.
  int best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c)
    if (counts[c] > counts[static_cast<std::size_t>(best)]) best = static_cast<int>(c);
  return best;
}

bool TreeProblem::should_seal(const OpenNode& node) const {
  if (node.depth >= config_.max_depth) return true;
  if (static_cast<int>(node.rows.size()) < config_.min_rows) return true;
  if (entropy_of(*data_, node.rows) <= config_.min_entropy) return true;
  const auto attr_count = data_->attributes.size();
  for (std::size_t j = 0; j < attr_count; ++j)
    if (!(node.used_attributes & (std::uint64_t{1} << j))) return false;
  return true;  // every attribute already used on this path
}

void TreeProblem::normalize(State& state) const {
  // Nodes are created leaf-shaped with their majority class fixed, so
  // sealing a front node is just popping it from the frontier.
  while (!state.frontier.empty() && should_seal(state.frontier.front()))
    state.frontier.pop_front();
}

TreeState TreeProblem::initial_state() const {
  TreeState state;
  TreeNode root;
  root.majority_class = majority_of(train_rows_);
  state.tree.nodes.push_back(root);
  OpenNode open;
  open.node_id = 0;
  open.ordinal = 0;
  open.depth = 0;
  open.rows = train_rows_;
  state.frontier.push_back(std::move(open));
  state.next_ordinal = 1;
  normalize(state);
  return state;
}

std::vector<ScoredAction<int>> TreeProblem::scored_actions(const State& state) const {
  std::vector<ScoredAction<int>> actions;
  if (state.frontier.empty()) return actions;
  const OpenNode& front = state.frontier.front();
  for (std::size_t j = 0; j < data_->attributes.size(); ++j) {
    if (front.used_attributes & (std::uint64_t{1} << j)) continue;
    const double gain = info_gain(*data_, front.rows, static_cast<int>(j));
    actions.push_back({static_cast<int>(j), std::max(0.0, gain)});
  }
  std::sort(actions.begin(), actions.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.action < b.action;
  });
  return actions;
}

TreeState TreeProblem::apply(const State& state, int attribute) const {
  if (state.frontier.empty()) throw IllegalActionError("no open node to split");
  if (attribute < 0 || attribute >= static_cast<int>(data_->attributes.size()))
    throw UnknownAttributeError("attribute index " + std::to_string(attribute) + " not in schema");
  const OpenNode& front = state.frontier.front();
  if (front.used_attributes & (std::uint64_t{1} << static_cast<unsigned>(attribute)))
    throw IllegalActionError("attribute already used on this path");

  TreeState next = state;
  OpenNode parent = std::move(next.frontier.front());
  next.frontier.pop_front();
  next.action_path.emplace_back(parent.ordinal, attribute);

  const auto& values = data_->attributes[static_cast<std::size_t>(attribute)].values;
  std::vector<std::vector<std::size_t>> partitions(values.size());
  for (auto r : parent.rows) {
    const auto v = static_cast<std::size_t>(data_->rows[r][static_cast<std::size_t>(attribute)]);
    partitions[v].push_back(r);
  }

  TreeNode& parent_node = next.tree.nodes[static_cast<std::size_t>(parent.node_id)];
  parent_node.attribute = attribute;
  parent_node.children.resize(values.size());
  const int parent_majority = parent_node.majority_class;

  for (std::size_t v = 0; v < values.size(); ++v) {
    const int child_id = static_cast<int>(next.tree.nodes.size());
    next.tree.nodes[static_cast<std::size_t>(parent.node_id)].children[v] = child_id;
    TreeNode child;
    if (partitions[v].empty()) {
      // Unseen value: a leaf carrying the parent's majority class.
      child.majority_class = parent_majority;
      next.tree.nodes.push_back(child);
      continue;
    }
    child.majority_class = majority_of(partitions[v]);
    next.tree.nodes.push_back(child);
    OpenNode open;
    open.node_id = child_id;
    open.ordinal = next.next_ordinal++;
    open.depth = parent.depth + 1;
    open.used_attributes =
        parent.used_attributes | (std::uint64_t{1} << static_cast<unsigned>(attribute));
    open.rows = std::move(partitions[v]);
    next.frontier.push_back(std::move(open));
  }

  normalize(next);
  return next;
}

double TreeProblem::energy(const State& state) const {
  if (!state.frontier.empty()) throw NotCandidateError("tree still has open nodes");
  return static_cast<double>(misclassifications(state.tree, *data_, val_rows_));
}

Tree id3_build(const Dataset& data, std::span<const std::size_t> train_rows, SplitConfig config,
               std::vector<std::pair<int, int>>* split_log) {
  if (train_rows.empty()) throw DomainError("training set is empty");

  auto majority = [&data](const std::vector<std::size_t>& rows) {
    std::vector<std::int64_t> counts(data.classes.size(), 0);
    for (auto r : rows) ++counts[static_cast<std::size_t>(data.labels[r])];
    int best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c)
      if (counts[c] > counts[static_cast<std::size_t>(best)]) best = static_cast<int>(c);
    return best;
  };

  Tree tree;
  std::deque<OpenNode> frontier;
  TreeNode root;
  std::vector<std::size_t> root_rows(train_rows.begin(), train_rows.end());
  root.majority_class = majority(root_rows);
  tree.nodes.push_back(root);
  OpenNode open;
  open.node_id = 0;
  open.ordinal = 0;
  open.rows = std::move(root_rows);
  frontier.push_back(std::move(open));
  int next_ordinal = 1;

  auto should_seal = [&](const OpenNode& node) {
    if (node.depth >= config.max_depth) return true;
    if (static_cast<int>(node.rows.size()) < config.min_rows) return true;
    if (entropy_of(data, node.rows) <= config.min_entropy) return true;
    for (std::size_t j = 0; j < data.attributes.size(); ++j)
      if (!(node.used_attributes & (std::uint64_t{1} << j))) return false;
    return true;
  };

  while (!frontier.empty()) {
    OpenNode node = std::move(frontier.front());
    frontier.pop_front();
    if (should_seal(node)) continue;  // already a majority leaf

    // Best unused attribute by information gain, ties by schema order.
    int best_attr = -1;
    double best_gain = -1.0;
    for (std::size_t j = 0; j < data.attributes.size(); ++j) {
      if (node.used_attributes & (std::uint64_t{1} << j)) continue;
      const double gain = std::max(0.0, info_gain(data, node.rows, static_cast<int>(j)));
      if (gain > best_gain) {
        best_gain = gain;
        best_attr = static_cast<int>(j);
      }
    }
    if (split_log) split_log->emplace_back(node.ordinal, best_attr);

    const auto& values = data.attributes[static_cast<std::size_t>(best_attr)].values;
    std::vector<std::vector<std::size_t>> partitions(values.size());
    for (auto r : node.rows)
      partitions[static_cast<std::size_t>(data.rows[r][static_cast<std::size_t>(best_attr)])]
          .push_back(r);

    TreeNode& parent_node = tree.nodes[static_cast<std::size_t>(node.node_id)];
    parent_node.attribute = best_attr;
    parent_node.children.resize(values.size());
    const int parent_majority = parent_node.majority_class;
    for (std::size_t v = 0; v < values.size(); ++v) {
      const int child_id = static_cast<int>(tree.nodes.size());
      tree.nodes[static_cast<std::size_t>(node.node_id)].children[v] = child_id;
      TreeNode child;
      if (partitions[v].empty()) {
        child.majority_class = parent_majority;
        tree.nodes.push_back(child);
        continue;
      }
      child.majority_class = majority(partitions[v]);
      tree.nodes.push_back(child);
      OpenNode child_open;
      child_open.node_id = child_id;
      child_open.ordinal = next_ordinal++;
      child_open.depth = node.depth + 1;
      child_open.used_attributes =
          node.used_attributes | (std::uint64_t{1} << static_cast<unsigned>(best_attr));
      child_open.rows = std::move(partitions[v]);
      frontier.push_back(std::move(child_open));
    }
  }
  return tree;
}

}  // namespace dilemma::tree
