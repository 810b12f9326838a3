#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wafomlab/f2core.hpp"
#include "wafomlab/netgen.hpp"

namespace wafomlab {

/// Two-stage random search for a low-WAFOM output transform U of a sequential
/// generator. Stage 1 draws square d x d transforms and scores WU' at n = d
/// digits; stage 2 appends random d x (n - d) blocks to the best one and scores
/// at n digits.
struct SearchConfig {
  int dim = 10;          // d
  int digits = 30;       // n
  int dimensions = 4;    // S
  int stage1_trials = 5000;
  int stage2_trials = 2000;
  std::uint64_t master_seed = 0;
  std::optional<PrimitivePoly> poly;  // drawn from the seed when absent
  int threads = 1;                    // <= 0: default_thread_count()
  int renormalize_every = 256;

  void validate() const;
};

struct TraceRecord {
  int stage = 0;  // 1 or 2
  int trial = 0;
  double wafom = 0.0;
};

struct Stage1Result {
  BitMatrix best_transform;  // d x d
  double best_wafom = 0.0;
  int best_trial = 0;
  std::vector<TraceRecord> trace;
};

struct SearchResult {
  BitMatrix best_transform;  // d x n, rank d
  double best_wafom = 0.0;
  double stage1_best_wafom = 0.0;
  int best_trial = 0;
  PrimitivePoly poly;
  int dimensions = 0;
  std::vector<TraceRecord> trace;  // stage 1 records, then stage 2

  SequentialGenerator generator() const { return {poly, best_transform, dimensions}; }
  LinearNet net() const { return generator_net(generator()); }
};

/// Independent 64-bit seed for one trial, mixed from the master seed so trials
/// can run in any order. Stage 0 is reserved for the polynomial draw.
std::uint64_t trial_seed(std::uint64_t master_seed, int stage, std::uint64_t trial);

/// Uniform over rank-`rows` matrices by resampling until full rank.
/// `attempts`, when given, receives the number of draws used.
BitMatrix random_full_rank_matrix(int rows, int cols, std::mt19937_64& rng, int* attempts = nullptr);

/// The configured polynomial, or a biased random primitive polynomial drawn from
/// the master seed.
PrimitivePoly resolve_poly(const SearchConfig& config);

Stage1Result stage1(const SearchConfig& config);

/// Trial 0 is the zero extension (U' | 0); trials 1.. append random blocks.
SearchResult stage2(const SearchConfig& config, const Stage1Result& first);

SearchResult search(const SearchConfig& config);

/// `stage,trial,wafom` CSV, stage-then-trial ordered, 17 significant digits.
std::string format_trace_csv(const SearchResult& result);

/// Text form of a generator for reloading by the CLI:
///
///     wafom-gen v1
///     n=<n> S=<S> d=<d>
///     poly=<a_1 ... a_d as a bit string>
///     <d lines of n-character rows of U>
std::string format_generator(const SequentialGenerator& gen);
SequentialGenerator parse_generator(std::string_view text);

}  // namespace wafomlab
