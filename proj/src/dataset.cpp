#include "dilemma/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dilemma/errors.hpp"

namespace dilemma::tree {

double entropy(std::span<const std::int64_t> class_counts) {
  std::int64_t total = 0;
  for (auto c : class_counts) total += c;
  if (total == 0) throw EmptySubsetError("entropy of an empty label multiset");
  double h = 0.0;
  for (auto c : class_counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

namespace {

std::vector<std::int64_t> label_counts(const Dataset& data, std::span<const std::size_t> rows) {
  std::vector<std::int64_t> counts(data.classes.size(), 0);
  for (auto r : rows) ++counts[static_cast<std::size_t>(data.labels[r])];
  return counts;
}

Dataset subset_by_rows(const Dataset& data, std::span<const std::size_t> rows) {
  Dataset out;
  out.attributes = data.attributes;
  out.class_name = data.class_name;
  out.classes = data.classes;
  out.bins = data.bins;
  out.rows.reserve(rows.size());
  out.labels.reserve(rows.size());
  for (auto r : rows) {
    out.rows.push_back(data.rows[r]);
    out.labels.push_back(data.labels[r]);
  }
  return out;
}

}  // namespace

double entropy_of(const Dataset& data, std::span<const std::size_t> rows) {
  const auto counts = label_counts(data, rows);
  return entropy(counts);
}

double info_gain(const Dataset& data, std::span<const std::size_t> rows, int attr) {
  if (attr < 0 || attr >= static_cast<int>(data.attributes.size()))
    throw UnknownAttributeError("attribute index " + std::to_string(attr) + " not in schema");
  if (rows.empty()) throw EmptySubsetError("information gain over an empty subset");

  const double h_total = entropy_of(data, rows);
  const std::size_t value_count = data.attributes[static_cast<std::size_t>(attr)].values.size();

  // counts[v][c]: rows with attribute value v and class c.
  std::vector<std::vector<std::int64_t>> counts(value_count,
                                                std::vector<std::int64_t>(data.classes.size(), 0));
  std::vector<std::int64_t> sizes(value_count, 0);
  for (auto r : rows) {
    const auto v = static_cast<std::size_t>(data.rows[r][static_cast<std::size_t>(attr)]);
    ++counts[v][static_cast<std::size_t>(data.labels[r])];
    ++sizes[v];
  }

  double weighted = 0.0;
  for (std::size_t v = 0; v < value_count; ++v) {
    if (sizes[v] == 0) continue;
    const double frac = static_cast<double>(sizes[v]) / static_cast<double>(rows.size());
    weighted += frac * entropy(counts[v]);
  }
  return h_total - weighted;
}

SplitResult split_dataset(const Dataset& data, std::array<double, 3> ratios, std::uint64_t seed) {
  for (double r : ratios)
    if (!(r > 0.0)) throw RatioError("split ratios must be positive");
  const double sum = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(sum - 1.0) > 1e-9)
    throw RatioError("split ratios must sum to 1, got " + std::to_string(sum));

  const std::size_t n = data.row_count();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(order[i], order[j]);
  }

  const auto n_train = static_cast<std::size_t>(std::llround(ratios[0] * static_cast<double>(n)));
  const auto n_val = static_cast<std::size_t>(std::llround(ratios[1] * static_cast<double>(n)));
  if (n_train == 0 || n_val == 0 || n_train + n_val >= n)
    throw TooFewRowsError("split of " + std::to_string(n) + " rows leaves an empty part");

  SplitResult out;
  out.train_rows.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  out.val_rows.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train),
                      order.begin() + static_cast<std::ptrdiff_t>(n_train + n_val));
  out.test_rows.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train + n_val), order.end());
  out.train = subset_by_rows(data, out.train_rows);
  out.validation = subset_by_rows(data, out.val_rows);
  out.test = subset_by_rows(data, out.test_rows);
  return out;
}

QuantizedColumn quantize_numeric(std::span<const double> column, int k) {
  if (k < 2) throw DomainError("bin count must be >= 2");
  if (column.empty()) throw EmptySubsetError("cannot quantize an empty column");

  const auto [min_it, max_it] = std::minmax_element(column.begin(), column.end());
  const double lo = *min_it;
  const double hi = *max_it;

  QuantizedColumn out;
  if (lo == hi) {
    out.collapsed = true;
    out.edges = {lo, hi};
    out.labels.assign(column.size(), "b0");
    return out;
  }

  const double width = (hi - lo) / static_cast<double>(k);
  out.edges.resize(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) out.edges[static_cast<std::size_t>(i)] = lo + width * i;
  out.edges.back() = hi;

  out.labels.reserve(column.size());
  for (double v : column)
    out.labels.push_back("b" + std::to_string(quantize_value(v, out)));
  return out;
}

int quantize_value(double value, const QuantizedColumn& q) {
  if (q.collapsed) return 0;
  const int k = static_cast<int>(q.edges.size()) - 1;
  const double lo = q.edges.front();
  const double hi = q.edges.back();
  if (value <= lo) return 0;
  if (value >= hi) return k - 1;
  const double width = (hi - lo) / static_cast<double>(k);
  // Edges belong to the bin below them.
  const int bin = static_cast<int>(std::ceil((value - lo) / width)) - 1;
  return std::clamp(bin, 0, k - 1);
}

}  // namespace dilemma::tree
