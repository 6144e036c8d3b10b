#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dilemma::tree {

struct Attribute {
  std::string name;
  std::vector<std::string> values;  // the categorical value set, in a fixed order

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Result of quantizing one numeric column into k equal-width bins.
struct BinInfo {
  std::string column;
  int bins = 0;
  std::vector<double> edges;  // k+1 edges, edges[0] = min, edges[k] = max
  bool collapsed = false;     // constant column, everything in "b0"
};

/// Categorical dataset with the class label stored separately from the
/// attribute vector. Cell values are indices into the schema value sets.
struct Dataset {
  std::vector<Attribute> attributes;
  std::string class_name;
  std::vector<std::string> classes;       // sorted label set
  std::vector<std::vector<int>> rows;     // rows[i][j] indexes attributes[j].values
  std::vector<int> labels;                // labels[i] indexes classes
  std::vector<BinInfo> bins;              // metadata of quantized columns

  std::size_t row_count() const { return rows.size(); }
};

/// Class entropy of a label count vector: -sum p log2 p with 0 log 0 = 0.
/// Throws EmptySubsetError when all counts are zero.
double entropy(std::span<const std::int64_t> class_counts);

/// Entropy of the labels of the given rows.
double entropy_of(const Dataset& data, std::span<const std::size_t> rows);

/// Information gain of splitting `rows` on attribute `attr`:
/// H(T) - sum |T_j(x)|/|T| * H(T_j(x)); empty partitions contribute 0.
/// Throws UnknownAttributeError / EmptySubsetError.
double info_gain(const Dataset& data, std::span<const std::size_t> rows, int attr);

struct SplitResult {
  Dataset train;
  Dataset validation;
  Dataset test;
  // Row indices into the source dataset; the three lists partition it.
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> val_rows;
  std::vector<std::size_t> test_rows;
};

/// Seeded shuffle (hand-rolled Fisher-Yates over mt19937_64 draws, so the
/// assignment does not depend on the standard library) followed by a
/// contiguous three-way split. Ratios must be positive and sum to 1 within
/// 1e-9; every part must end up nonempty.
SplitResult split_dataset(const Dataset& data, std::array<double, 3> ratios, std::uint64_t seed);

struct QuantizedColumn {
  std::vector<std::string> labels;  // "b0".."b{k-1}" per input value
  std::vector<double> edges;
  bool collapsed = false;
};

/// Equal-width binning over [min, max]. The first bin is closed on both
/// sides and later bins are left-open, so a value exactly on an edge falls
/// into the lower bin; the maximum maps to bin k-1. A constant column
/// collapses to a single "b0" category with the `collapsed` flag set.
QuantizedColumn quantize_numeric(std::span<const double> column, int k);

/// Bin index for a single value against previously computed edges
/// (values outside [min, max] clamp to the first/last bin).
int quantize_value(double value, const QuantizedColumn& q);

}  // namespace dilemma::tree
