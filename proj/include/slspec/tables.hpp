#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slspec/harness.hpp"

namespace slspec {

struct ExpectedEntry {
  int N = 0;
  int k = 0;
  double delta = 0.0;
  std::optional<double> order;
};

struct ExpectedBlock {
  std::string potential;
  std::string bc;
  std::vector<ExpectedEntry> rows;
};

/// The embedded convergence tables, in file order.
const std::vector<ExpectedBlock>& expected_tables();

/// Raw text of the embedded table file.
const char* expected_tables_source();

/// |ours - ref| <= half a unit in the third significant digit of ref.
bool matches_significant_digits(double ours, double ref, int digits = 3);

constexpr double kOrderTolerance = 0.02;

struct EntryComparison {
  ExpectedEntry expected;
  double delta = kUndefined;
  double order = kUndefined;
  bool delta_ok = false;
  bool order_ok = false;
  std::string error;

  bool ok() const { return delta_ok && order_ok; }
};

struct BlockComparison {
  std::string potential;
  std::string bc;
  std::vector<EntryComparison> entries;
  double seconds = 0.0;

  int failures() const;
};

/// Re-runs one block's sweep (no reference solve) and compares entry-wise.
BlockComparison reproduce_block(const ExpectedBlock& block, int workers = 0);

/// Blocks whose potential name matches `potential` (all when empty).
std::vector<BlockComparison> reproduce_tables(const std::string& potential = {},
                                              int workers = 0);

}  // namespace slspec
