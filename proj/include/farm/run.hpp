#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace farm {

/// Parsed command-line options for one end-to-end run.
struct RunOptions {
  std::string input;
  int lambda = 0;
  std::vector<double> min_support;  // position i is the level-(i+1) threshold
  double min_confidence = 0.5;
  std::optional<std::size_t> max_k;
  std::string format = "json";
  bool oracle = false;
  bool tid_column = false;
  int workers = 1;
  // Test hook: perturbs one mined support so --oracle reports a mismatch.
  bool inject_miner_fault = false;
};

/// Loads, qualifies, mines and reports. Exit codes: 0 success, 1 input or
/// parse error, 2 invalid configuration, 3 oracle mismatch, 4 no qualified
/// dimension.
int run(const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace farm
