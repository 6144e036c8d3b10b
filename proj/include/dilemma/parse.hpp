#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dilemma/dataset.hpp"
#include "dilemma/knapsack.hpp"

namespace dilemma::io {

/// Knapsack instance text format: line 1 holds "n W", followed by n lines
/// of "v w". Blank lines are skipped; anything else beyond the n items is
/// rejected. Errors carry 1-based line numbers.
knapsack::KnapsackInstance parse_knapsack(std::string_view text);

/// Inverse of parse_knapsack (round-trips exactly).
std::string write_knapsack(const knapsack::KnapsackInstance& instance);

struct BinSpec {
  std::string column;
  int bins = 0;
};

/// Dataset CSV: first row is the header, last column the class label, every
/// cell a categorical string unless its column appears in `bin_specs`, in
/// which case values are parsed as reals and quantized. No quoting or
/// embedded commas. Value sets and the class set are sorted, so the schema
/// does not depend on row order.
tree::Dataset parse_dataset(std::string_view csv,
                            const std::vector<BinSpec>& bin_specs = {});

/// Reads a whole file; throws IoError when it cannot be opened.
std::string read_file(const std::string& path);

/// Writes bytes to a file (truncating); throws IoError on failure.
void write_file(const std::string& path, std::string_view bytes);

}  // namespace dilemma::io
