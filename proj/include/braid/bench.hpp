#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braid/gwp.hpp"

namespace braid {

/// One scaling-harness cell set-up: for each (n, M) and trial, a seeded
/// random x of length M with nonzero exponent sum, a small exponent c
/// drawn from the trial index alone (so cells with different M see the
/// same c sequence), and y built by fuzzing x^c with relation moves.
struct BenchConfig {
  std::vector<int> braid_indices;
  std::vector<int> word_lengths;
  int trials = 5;
  std::uint64_t seed = 0;
  bool measure_time = true;  // when false, wall_ns is reported as 0
  int fuzz_moves = 32;
  int max_abs_exponent = 3;
};

struct BenchRecord {
  int n;
  int word_length;  // the generation knob M
  int l_min;
  long long c;
  std::string verdict;
  std::uint64_t letters_scanned;
  std::uint64_t factor_ops;
  std::uint64_t wall_ns;
  std::uint64_t trial_seed;
};

struct BenchSlopes {
  double wall_vs_length = 0.0;
  double wall_vs_index = 0.0;
  double factor_ops_vs_length = 0.0;
  double factor_ops_vs_index = 0.0;
};

/// Runs every cell. Records are fully reproducible from (seed, n, M,
/// trial); only wall_ns varies between runs, and it is forced to 0 when
/// measure_time is off.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Log-log regression slopes of per-cell mean wall time and factor
/// operations: against M at fixed n (averaged over n), and against n at
/// fixed M (averaged over M). Slope 0 when a metric is constant or zero.
BenchSlopes bench_slopes(const BenchConfig& config,
                         const std::vector<BenchRecord>& records);

/// Least-squares slope of log(y) against log(x); points with y <= 0 are
/// dropped, and fewer than two surviving points give slope 0.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace braid
