#pragma once

// Empirical word-length statistics over seeded random samples.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include "cayley/bfs.hpp"
#include "cayley/sampling.hpp"
#include "cayley/synth.hpp"

namespace cayley {

struct StatsSummary {
  std::size_t n = 0;
  std::int64_t k = 0;
  std::size_t samples = 0;
  std::uint64_t min_length = 0;
  std::uint64_t max_length = 0;
  double mean_length = 0;
  double bound = 0;
  double lower_bound = 0;          // (n^2 - 1) ln k / ln 3
  double max_ratio_to_bound = 0;   // max_length / bound
  double mean_ratio_to_lower = 0;  // mean_length / lower_bound
  double seconds_per_synthesis = 0;
  std::size_t verified = 0;
  std::uint32_t diameter = 0;      // exhaustive mode only
};

struct StatsOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool verify = true;
};

namespace detail {

struct SampleResult {
  std::uint64_t length = 0;
  bool verified = false;
  double seconds = 0;
};

inline SampleResult run_sample(const Matrix& m, bool verify) {
  auto t0 = std::chrono::steady_clock::now();
  SynthesisReport r = synthesize(m, {verify});
  auto t1 = std::chrono::steady_clock::now();
  return {r.length, r.verified, std::chrono::duration<double>(t1 - t0).count()};
}

inline StatsSummary summarize(std::size_t n, const Modulus& mod, const std::vector<SampleResult>& results) {
  StatsSummary s;
  s.n = n;
  s.k = mod.value();
  s.samples = results.size();
  s.bound = length_bound(n, mod.value());
  s.lower_bound = (static_cast<double>(n * n) - 1) * std::log(static_cast<double>(mod.value())) / std::log(3.0);
  if (results.empty()) return s;
  s.min_length = std::numeric_limits<std::uint64_t>::max();
  double total = 0, seconds = 0;
  for (const auto& r : results) {
    s.min_length = std::min(s.min_length, r.length);
    s.max_length = std::max(s.max_length, r.length);
    total += static_cast<double>(r.length);
    seconds += r.seconds;
    s.verified += r.verified ? 1 : 0;
  }
  s.mean_length = total / static_cast<double>(results.size());
  s.max_ratio_to_bound = static_cast<double>(s.max_length) / s.bound;
  s.mean_ratio_to_lower = s.mean_length / s.lower_bound;
  s.seconds_per_synthesis = seconds / static_cast<double>(results.size());
  return s;
}

}  // namespace detail

/// Synthesizes `samples` seeded random elements. Sample i depends only on
/// (seed, i), so the summary (timings aside) does not depend on `threads`.
inline StatsSummary stats(std::size_t n, const Modulus& mod, std::size_t samples, StatsOptions opts = {}) {
  check_dimension(n);
  std::vector<detail::SampleResult> results(samples);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < samples && !failed; i = next++) {
      try {
        auto rng = sample_rng(opts.seed, i);
        results[i] = detail::run_sample(random_special(n, mod, rng), opts.verify);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1u, opts.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return detail::summarize(n, mod, results);
}

/// Synthesizes every element of a BFS-enumerable group and records the diameter.
inline StatsSummary exhaustive_stats(std::size_t n, const Modulus& mod, bool verify = true) {
  BfsTable table = bfs_distances(n, mod);
  std::vector<detail::SampleResult> results;
  results.reserve(table.elements.size());
  for (const auto& m : table.elements) results.push_back(detail::run_sample(m, verify));
  StatsSummary s = detail::summarize(n, mod, results);
  s.diameter = table.diameter;
  return s;
}

}  // namespace cayley
