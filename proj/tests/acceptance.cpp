// Acceptance suite: end-to-end checks of the library and CLI at fixed
// seeds and pinned thresholds. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "braid/bench.hpp"
#include "braid/exponent.hpp"
#include "braid/gwp.hpp"
#include "braid/handle_reduction.hpp"
#include "braid/normal_form.hpp"
#include "braid/permutation.hpp"
#include "braid/sampling.hpp"
#include "braid/word_io.hpp"

#include "cli_runner.hpp"

using namespace braid;
using braid::testutil::run_cli;

namespace {

constexpr std::uint64_t kMasterSeed = 20260811;
int failures_in_current = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    ++failures_in_current;
    std::printf("       ! %s\n", what);
  }
}

BraidWord W(int n, const std::string& text) {
  return parse_word(text, BraidIndex(n));
}

// 1. Exponent sum of the worked example is exactly 1.
void criterion_exp_example() {
  expect(exp_sum(W(4, "s1 s3^-3 s2^2 s1")).value == 1, "library exp != 1");
  const auto cli = run_cli("exp -n 4 \"s1 s3^-3 s2^2 s1\"");
  expect(cli.exit_code == 0 && cli.out == "1\n", "CLI exp != 1");
}

// 2. Exponent-sum laws, 1000 randomized trials each, exact equality.
void criterion_exp_laws() {
  std::mt19937_64 rng(mix_seed(kMasterSeed, 2));
  auto random_word = [&](std::size_t max_len) {
    const int n = 3 + static_cast<int>(rng() % 6);  // 3..8
    return random_artin_word(BraidIndex(n), 1 + rng() % max_len, rng());
  };

  for (int t = 0; t < 1000; ++t) {  // relation invariance, fuzz depth <= 100
    const BraidWord w = random_word(64);
    const BraidWord f = fuzz_word(w, 1 + static_cast<int>(rng() % 100), rng());
    if (exp_sum(f).value != exp_sum(w).value) {
      expect(false, "relation invariance violated");
      return;
    }
  }
  for (int t = 0; t < 1000; ++t) {  // additivity
    const BraidIndex index(3 + static_cast<int>(rng() % 6));
    const BraidWord u = random_artin_word(index, rng() % 64, rng());
    const BraidWord v = random_artin_word(index, rng() % 64, rng());
    if (exp_sum(concatenate(u, v)).value !=
        exp_sum(u).value + exp_sum(v).value) {
      expect(false, "additivity violated");
      return;
    }
  }
  for (int t = 0; t < 1000; ++t) {  // inversion
    const BraidWord w = random_word(64);
    if (exp_sum(invert(w)).value != -exp_sum(w).value) {
      expect(false, "inversion law violated");
      return;
    }
  }
  for (int t = 0; t < 1000; ++t) {  // power scaling
    const BraidWord w = random_word(32);
    const long long k = static_cast<long long>(rng() % 17) - 8;
    if (exp_sum(power(w, k)).value != k * exp_sum(w).value) {
      expect(false, "power scaling violated");
      return;
    }
  }
}

// 3. Word-problem dual-solver agreement on 2000 pairs per braid index.
void criterion_solver_agreement() {
  std::mt19937_64 rng(mix_seed(kMasterSeed, 3));
  for (int n = 3; n <= 6; ++n) {
    const BraidIndex index(n);
    for (int t = 0; t < 2000; ++t) {
      const BraidWord u = random_artin_word(index, 1 + rng() % 24, rng());
      const bool constructed_equal = (t % 2 == 0);
      const BraidWord v =
          constructed_equal
              ? fuzz_word(u, 1 + static_cast<int>(rng() % 48), rng())
              : random_artin_word(index, 1 + rng() % 24, rng());

      const bool nf = equal(u, v);
      const bool hr = handle_equal(u, v);
      if (nf != hr) {
        expect(false, "solvers disagree");
        return;
      }
      if (constructed_equal && !nf) {
        expect(false, "constructed-equal pair reported unequal");
        return;
      }
      if (nf && (exp_sum(u).value != exp_sum(v).value ||
                 !(permutation_projection(u) == permutation_projection(v)))) {
        expect(false, "necessary condition violated on an equal verdict");
        return;
      }
    }
  }
}

// 4. Round trip: gwp recovers the constructed exponent in every trial.
void criterion_gwp_roundtrip() {
  std::mt19937_64 rng(mix_seed(kMasterSeed, 4));
  for (int t = 0; t < 500; ++t) {
    const BraidIndex index(3 + static_cast<int>(rng() % 4));  // n <= 6
    const BraidWord x =
        random_artin_word_nonzero_exp(index, 1 + rng() % 48, rng());
    const long long c = static_cast<long long>(rng() % 21) - 10;
    const BraidWord y =
        fuzz_word(power(x, c), static_cast<int>(rng() % 201), rng());
    const GwpResult r = gwp(x, y);
    if (!r.is_power() || r.exponent() != c) {
      expect(false, "constructed power not recovered");
      return;
    }
  }
}

// 5. Exhaustive scan over c' in [-12, 12] matches the verdict exactly.
void criterion_gwp_uniqueness() {
  std::mt19937_64 rng(mix_seed(kMasterSeed, 5));
  for (int t = 0; t < 200; ++t) {
    const BraidIndex index(3 + static_cast<int>(rng() % 3));
    const BraidWord x =
        random_artin_word_nonzero_exp(index, 4 + rng() % 7, rng());
    BraidWord y = BraidWord::identity(index);
    for (;;) {
      y = (t % 2 == 0)
              ? fuzz_word(power(x, static_cast<long long>(rng() % 17) - 8),
                          1 + static_cast<int>(rng() % 40), rng())
              : random_artin_word(index, 4 + rng() % 17, rng());
      const long long ex = exp_sum(x).value, ey = exp_sum(y).value;
      const long long q = ey / ex;
      if (ey % ex != 0 || (q <= 12 && q >= -12)) break;  // candidate in range
    }

    std::vector<long long> hits;
    for (long long c = -12; c <= 12; ++c)
      if (equal(power(x, c), y)) hits.push_back(c);

    const GwpResult r = gwp(x, y);
    if (r.is_power()) {
      if (hits.size() != 1 || hits[0] != r.exponent()) {
        expect(false, "scan does not isolate the reported exponent");
        return;
      }
    } else if (!hits.empty()) {
      expect(false, "scan found a power behind a negative verdict");
      return;
    }
  }
}

// 6. Every zero-exponent generator is refused, library and CLI alike.
void criterion_zero_exp_refusal() {
  std::mt19937_64 rng(mix_seed(kMasterSeed, 6));
  for (int t = 0; t < 100; ++t) {
    const BraidIndex index(3 + static_cast<int>(rng() % 4));
    const BraidWord u = random_artin_word(index, 1 + rng() % 8, rng());
    const BraidWord v = random_artin_word(index, 1 + rng() % 8, rng());
    const BraidWord x =
        concatenate(concatenate(u, v), concatenate(invert(u), invert(v)));
    if (exp_sum(x).value != 0) {
      expect(false, "commutator has nonzero exponent sum");
      return;
    }
    const BraidWord y = random_artin_word(index, rng() % 12, rng());
    if (gwp(x, y).verdict() != GwpResult::Verdict::ZeroExponentUnsupported) {
      expect(false, "zero-exponent generator not refused");
      return;
    }
    const auto cli =
        run_cli("log -n " + std::to_string(index.strands()) + " \"" +
                format_word(x) + "\" \"" + format_word(y) + "\"");
    if (cli.exit_code != 3) {
      expect(false, "CLI exit code for zero-exponent generator is not 3");
      return;
    }
  }
}

// 7. Scaling trend: factor operations grow polynomially with M, slope at
// most 3.5, and cell means are monotone in M for each n.
void criterion_complexity_trend() {
  BenchConfig config;
  config.braid_indices = {4, 8};
  config.word_lengths = {32, 64, 128, 256};
  config.trials = 5;
  config.seed = kMasterSeed;
  config.measure_time = false;
  const auto records = run_bench(config);
  const auto slopes = bench_slopes(config, records);

  expect(slopes.factor_ops_vs_length <= 3.5,
         "factor-op slope vs M exceeds 3.5");
  expect(slopes.factor_ops_vs_length > 0, "factor-op slope vs M not positive");

  for (int n : config.braid_indices) {
    double previous = -1;
    for (int m : config.word_lengths) {
      double sum = 0;
      int count = 0;
      for (const auto& r : records)
        if (r.n == n && r.word_length == m) {
          sum += static_cast<double>(r.factor_ops);
          ++count;
        }
      const double mean = sum / count;
      if (mean <= previous) {
        expect(false, "factor-op means not monotone in M");
        return;
      }
      previous = mean;
    }
  }
}

// 8. CLI contract: exit codes 0/3/1 on the three log examples, JSON
// round-trips.
void criterion_cli_contract() {
  expect(run_cli("log -n 3 \"s1 s2\" \"s1 s2 s1 s2 s1 s2\"").exit_code == 0,
         "power example exit code != 0");
  expect(run_cli("log -n 3 \"s1 s2^-1\" \"s1\"").exit_code == 3,
         "zero-exponent example exit code != 3");
  expect(run_cli("log -n 4 \"s1 s2\" \"s1 s2 s3\"").exit_code == 1,
         "non-power example exit code != 1");

  const auto out = run_cli("log --json -n 3 \"s1 s2\" \"s1 s2 s1 s2 s1 s2\"");
  try {
    const auto j = nlohmann::json::parse(out.out);
    expect(j["verdict"] == "power" && j["c"] == 3 && j.contains("stats"),
           "JSON payload does not round-trip the verdict");
  } catch (const std::exception&) {
    expect(false, "JSON output failed to parse");
  }
}

struct Criterion {
  const char* label;
  void (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. exponent sum of the worked example", criterion_exp_example},
      {"2. exponent-sum laws, 4 x 1000 randomized trials",
       criterion_exp_laws},
      {"3. dual-solver agreement, 2000 pairs x n in 3..6",
       criterion_solver_agreement},
      {"4. power recovery through fuzzed rewritings, 500 trials",
       criterion_gwp_roundtrip},
      {"5. exhaustive exponent scan matches verdicts, 200 instances",
       criterion_gwp_uniqueness},
      {"6. zero-exponent generators refused, 100 commutators",
       criterion_zero_exp_refusal},
      {"7. factor-operation scaling slope <= 3.5 and monotone in M",
       criterion_complexity_trend},
      {"8. CLI exit codes 0/3/1 and JSON round-trip",
       criterion_cli_contract},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    failures_in_current = 0;
    criterion.run();
    const bool ok = failures_in_current == 0;
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", criterion.label);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  if (failed > 0) std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
