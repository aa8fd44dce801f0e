// Command-line surface of the braid library.
//
// Exit codes are a stable contract: 0 = positive verdict, 1 = negative
// verdict, 2 = input error, 3 = unsupported (generator with exponent
// sum 0).

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braid/bench.hpp"
#include "braid/exponent.hpp"
#include "braid/gwp.hpp"
#include "braid/normal_form.hpp"
#include "braid/sampling.hpp"
#include "braid/word_io.hpp"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnsupported = 3;

using nlohmann::json;

const char* verdict_name(const braid::GwpResult& r) {
  switch (r.verdict()) {
    case braid::GwpResult::Verdict::Power:
      return "power";
    case braid::GwpResult::Verdict::NotPower:
      return "not_power";
    default:
      return "unsupported";
  }
}

json result_to_json(const braid::GwpResult& r, const braid::StepStats* stats) {
  json j;
  j["verdict"] = verdict_name(r);
  j["c"] = r.is_power() ? json(r.exponent()) : json(nullptr);
  if (r.verdict() == braid::GwpResult::Verdict::NotPower)
    j["reason"] = r.reason() == braid::NotPowerReason::ExpNotDivisible
                      ? "exp_not_divisible"
                      : "comparison_failed";
  else if (r.verdict() == braid::GwpResult::Verdict::ZeroExponentUnsupported)
    j["reason"] = "zero_exponent";
  else
    j["reason"] = nullptr;
  if (stats) {
    j["stats"] = {{"letters_scanned", stats->letters_scanned},
                  {"power_letters", stats->power_letters},
                  {"factor_ops", stats->factor_ops},
                  {"wall_ns", stats->wall_ns},
                  {"l_min", stats->l_min}};
  }
  return j;
}

int gwp_exit_code(const braid::GwpResult& r) {
  switch (r.verdict()) {
    case braid::GwpResult::Verdict::Power:
      return kExitPositive;
    case braid::GwpResult::Verdict::NotPower:
      return kExitNegative;
    default:
      return kExitUnsupported;
  }
}

// Range arguments: "4,8" lists cells, "4..8" is a range (step 1 for -n,
// doubling for -M).
std::vector<int> parse_cells(const std::string& text, bool geometric) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad range " + text);
    for (int v = lo; v <= hi; v = geometric ? v * 2 : v + 1) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty range " + text);
  for (int v : out)
    if (v < 1) throw std::invalid_argument("bad range " + text);
  return out;
}

struct Args {
  int n = 0;
  std::string word, word2;
  long long k = 0;
  bool as_json = false;
  std::string file;
  std::string n_range = "4..8", m_range = "16..256";
  int trials = 5;
  std::uint64_t seed = 0;
  bool no_time = false;
};

int run_exp(const Args& a) {
  const braid::BraidWord w = braid::parse_word(a.word, braid::BraidIndex(a.n));
  std::cout << braid::exp_sum(w).value << "\n";
  return kExitPositive;
}

int run_nf(const Args& a) {
  const braid::BraidIndex index(a.n);
  const auto form =
      braid::left_canonical_form(braid::parse_word(a.word, index));
  std::cout << "D^" << form.inf();
  for (const auto& factor : form.factors()) {
    std::cout << " . [";
    const auto& img = factor.perm().image();
    for (std::size_t i = 0; i < img.size(); ++i)
      std::cout << (i ? " " : "") << img[i];
    std::cout << "]";
  }
  std::cout << "\n";
  return kExitPositive;
}

int run_eq(const Args& a) {
  const braid::BraidIndex index(a.n);
  const bool same = braid::equal(braid::parse_word(a.word, index),
                                 braid::parse_word(a.word2, index));
  std::cout << (same ? "equal" : "unequal") << "\n";
  return same ? kExitPositive : kExitNegative;
}

int run_pow(const Args& a) {
  const braid::BraidIndex index(a.n);
  std::cout << braid::format_word(
                   braid::power(braid::parse_word(a.word, index), a.k))
            << "\n";
  return kExitPositive;
}

int run_log(const Args& a) {
  const braid::BraidIndex index(a.n);
  const braid::BraidWord x = braid::parse_word(a.word, index);
  const braid::BraidWord y = braid::parse_word(a.word2, index);
  const auto [result, stats] = braid::gwp_with_stats(x, y);

  if (a.as_json) {
    std::cout << result_to_json(result, &stats).dump() << "\n";
  } else {
    switch (result.verdict()) {
      case braid::GwpResult::Verdict::Power:
        std::cout << "x^" << result.exponent() << " = y\n";
        break;
      case braid::GwpResult::Verdict::NotPower:
        std::cout << "y is not a power of x\n";
        break;
      default:
        std::cout << "unsupported: exp(x) = 0\n";
        break;
    }
  }
  return gwp_exit_code(result);
}

int run_batch(const Args& a) {
  const braid::BraidIndex index(a.n);
  std::ifstream in(a.file);
  if (!in) {
    std::cerr << "cannot open " << a.file << "\n";
    return kExitInputError;
  }
  const auto pairs = braid::parse_batch(in, index);

  // Pairs are independent; evaluate in parallel and print in input order.
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                            pairs.size() ? pairs.size() : 1);
  std::vector<braid::GwpResult> results;
  results.reserve(pairs.size());
  {
    std::vector<std::future<std::vector<braid::GwpResult>>> futures;
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < pairs.size(); begin += chunk) {
      const std::size_t end = std::min(begin + chunk, pairs.size());
      futures.push_back(std::async(std::launch::async, [&, begin, end] {
        std::vector<braid::GwpResult> part;
        part.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i)
          part.push_back(braid::gwp(pairs[i].first, pairs[i].second));
        return part;
      }));
    }
    for (auto& f : futures)
      for (auto& r : f.get()) results.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    json j = result_to_json(results[i], nullptr);
    j["pair"] = i + 1;
    std::cout << j.dump() << "\n";
  }
  return kExitPositive;
}

int run_bench_cmd(const Args& a) {
  braid::BenchConfig config;
  config.braid_indices = parse_cells(a.n_range, /*geometric=*/false);
  config.word_lengths = parse_cells(a.m_range, /*geometric=*/true);
  config.trials = a.trials;
  config.seed = a.seed;
  config.measure_time = !a.no_time;
  for (int n : config.braid_indices)
    if (n < 2) throw std::invalid_argument("braid index must be at least 2");

  const auto records = braid::run_bench(config);
  const auto slopes = braid::bench_slopes(config, records);

  std::cout << "n,M,L_min,c,verdict,letters_scanned,factor_ops,wall_ns,seed\n";
  for (const auto& r : records)
    std::cout << r.n << "," << r.word_length << "," << r.l_min << "," << r.c
              << "," << r.verdict << "," << r.letters_scanned << ","
              << r.factor_ops << "," << r.wall_ns << "," << r.trial_seed
              << "\n";
  char line[128];
  std::snprintf(line, sizeof line, "# slope_wall_vs_M %.4f\n",
                slopes.wall_vs_length);
  std::cout << line;
  std::snprintf(line, sizeof line, "# slope_wall_vs_n %.4f\n",
                slopes.wall_vs_index);
  std::cout << line;
  std::snprintf(line, sizeof line, "# slope_factor_ops_vs_M %.4f\n",
                slopes.factor_ops_vs_length);
  std::cout << line;
  std::snprintf(line, sizeof line, "# slope_factor_ops_vs_n %.4f\n",
                slopes.factor_ops_vs_index);
  std::cout << line;
  return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid group calculator: word problem, normal forms, and "
               "cyclic-subgroup membership"};
  app.require_subcommand(1);
  Args args;

  auto add_index = [&](CLI::App* sub) {
    sub->add_option("-n,--index", args.n, "braid index (number of strands)")
        ->required()
        ->check(CLI::Range(2, 1 << 20));
  };

  CLI::App* exp = app.add_subcommand("exp", "exponent sum of a word");
  add_index(exp);
  exp->add_option("word", args.word)->required();

  CLI::App* nf = app.add_subcommand("nf", "left canonical form of a word");
  add_index(nf);
  nf->add_option("word", args.word)->required();

  CLI::App* eq = app.add_subcommand("eq", "decide whether two words are equal");
  add_index(eq);
  eq->add_option("u", args.word)->required();
  eq->add_option("v", args.word2)->required();

  CLI::App* pow = app.add_subcommand("pow", "k-th power of a word");
  add_index(pow);
  pow->add_option("word", args.word)->required();
  pow->add_option("k", args.k)->required();

  CLI::App* log = app.add_subcommand(
      "log", "find the exponent c with x^c = y, if it exists");
  add_index(log);
  log->add_option("x", args.word)->required();
  log->add_option("y", args.word2)->required();
  log->add_flag("--json", args.as_json, "machine-readable output");

  CLI::App* batch = app.add_subcommand(
      "batch", "run log over a TSV file of word pairs, one JSON line each");
  add_index(batch);
  batch->add_option("file", args.file)->required();

  CLI::App* bench = app.add_subcommand(
      "bench", "empirical scaling harness; emits CSV plus fitted slopes");
  bench->add_option("--n", args.n_range, "braid indices: A..B or comma list");
  bench->add_option("--M", args.m_range,
                    "word lengths: A..B (doubling) or comma list");
  bench->add_option("--trials", args.trials)->check(CLI::PositiveNumber);
  bench->add_option("--seed", args.seed);
  bench->add_flag("--no-time", args.no_time,
                  "report wall_ns as 0 for byte-identical reruns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (exp->parsed()) return run_exp(args);
    if (nf->parsed()) return run_nf(args);
    if (eq->parsed()) return run_eq(args);
    if (pow->parsed()) return run_pow(args);
    if (log->parsed()) return run_log(args);
    if (batch->parsed()) return run_batch(args);
    if (bench->parsed()) return run_bench_cmd(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
