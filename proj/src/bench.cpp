#include "braid/bench.hpp"

#include <cmath>
#include <map>

#include "braid/sampling.hpp"

namespace braid {

namespace {

const char* verdict_name(const GwpResult& r) {
  switch (r.verdict()) {
    case GwpResult::Verdict::Power:
      return "power";
    case GwpResult::Verdict::NotPower:
      return "not_power";
    default:
      return "unsupported";
  }
}

long long draw_exponent(std::uint64_t seed, int trial, int max_abs) {
  // Depends on the trial index only, never on (n, M): cells of different
  // sizes then compare like for like and counts stay monotone in M.
  const std::uint64_t r = mix_seed(seed, 0xC001'0000ull + trial);
  const long long magnitude = 1 + static_cast<long long>(r % max_abs);
  return (r >> 32) & 1 ? magnitude : -magnitude;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  records.reserve(config.braid_indices.size() * config.word_lengths.size() *
                  config.trials);
  for (int n : config.braid_indices) {
    for (int m : config.word_lengths) {
      for (int trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t cell =
            mix_seed(config.seed, (static_cast<std::uint64_t>(n) << 32) ^
                                      static_cast<std::uint64_t>(m));
        const std::uint64_t trial_seed = mix_seed(cell, trial);

        const BraidIndex index(n);
        const BraidWord x =
            random_artin_word_nonzero_exp(index, m, trial_seed);
        const long long c =
            draw_exponent(config.seed, trial, config.max_abs_exponent);
        const BraidWord y = fuzz_word(power(x, c), config.fuzz_moves,
                                      mix_seed(trial_seed, 0xF022ull));

        auto [result, stats] = gwp_with_stats(x, y);
        records.push_back({n, m, stats.l_min,
                           result.is_power() ? result.exponent() : 0,
                           verdict_name(result), stats.letters_scanned,
                           stats.factor_ops,
                           config.measure_time ? stats.wall_ns : 0,
                           trial_seed});
      }
    }
  }
  return records;
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& [x, y] : points) {
    if (y <= 0 || x <= 0) continue;
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count < 2) return 0.0;
  const double denom = count * sxx - sx * sx;
  if (denom == 0) return 0.0;
  return (count * sxy - sx * sy) / denom;
}

BenchSlopes bench_slopes(const BenchConfig& config,
                         const std::vector<BenchRecord>& records) {
  // Cell means first.
  std::map<std::pair<int, int>, std::pair<double, double>> sums;  // wall, ops
  std::map<std::pair<int, int>, int> counts;
  for (const auto& r : records) {
    auto key = std::make_pair(r.n, r.word_length);
    sums[key].first += static_cast<double>(r.wall_ns);
    sums[key].second += static_cast<double>(r.factor_ops);
    counts[key] += 1;
  }

  auto mean = [&](int n, int m) {
    auto key = std::make_pair(n, m);
    const double k = counts[key];
    return std::make_pair(sums[key].first / k, sums[key].second / k);
  };

  BenchSlopes slopes;
  int rows = 0;
  for (int n : config.braid_indices) {
    std::vector<std::pair<double, double>> wall, ops;
    for (int m : config.word_lengths) {
      auto [w, o] = mean(n, m);
      wall.emplace_back(m, w);
      ops.emplace_back(m, o);
    }
    slopes.wall_vs_length += fit_loglog_slope(wall);
    slopes.factor_ops_vs_length += fit_loglog_slope(ops);
    ++rows;
  }
  if (rows > 0) {
    slopes.wall_vs_length /= rows;
    slopes.factor_ops_vs_length /= rows;
  }

  int cols = 0;
  for (int m : config.word_lengths) {
    std::vector<std::pair<double, double>> wall, ops;
    for (int n : config.braid_indices) {
      auto [w, o] = mean(n, m);
      wall.emplace_back(n, w);
      ops.emplace_back(n, o);
    }
    slopes.wall_vs_index += fit_loglog_slope(wall);
    slopes.factor_ops_vs_index += fit_loglog_slope(ops);
    ++cols;
  }
  if (cols > 0) {
    slopes.wall_vs_index /= cols;
    slopes.factor_ops_vs_index /= cols;
  }
  return slopes;
}

}  // namespace braid
