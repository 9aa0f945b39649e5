#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "scherk/curvature.hpp"

namespace scherk {

/// Rectangular (p, q) grid: p_i = pi i / p_steps, q_j = 2 pi j / q_steps for
/// interior indices, row-major with p outer.
struct SweepSpec {
  int p_steps = 16;
  int q_steps = 16;
  bool r_filter = true;  // skip nodes outside region R instead of failing them
  bool refine = false;   // 3 rounds of 10x10 local grids around the argmax
  int threads = 0;       // 0: hardware concurrency
};

struct SweepFailure {
  ScherkParams params;
  std::string message;
};

struct SweepResult {
  std::vector<CurvatureReport> rows;
  std::vector<CurvatureReport> refinement_rows;
  double max_absK = 0.0;
  ScherkParams argmax;
  int violations = 0;
  std::vector<SweepFailure> failures;
};

/// Throws DomainError if either step count is below 8. Per-node errors are
/// collected in `failures`; results are merged in row-major order regardless
/// of the thread count.
SweepResult sweep_region(const SweepSpec& spec);

/// Header plus one line per grid row, then refinement rows; fixed notation
/// with 12 decimals, LF line endings.
void write_csv(const SweepResult& result, std::ostream& out);
/// Throws std::runtime_error naming the path on IO failure.
void export_csv(const SweepResult& result, const std::filesystem::path& path);

}  // namespace scherk
