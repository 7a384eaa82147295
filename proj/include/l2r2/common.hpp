#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace l2r2 {

// Bad inputs: files, schemas, flag values. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Failures while running: I/O, diverging optimization. CLI exit code 1.
class RuntimeError : public std::runtime_error {
 public:
  explicit RuntimeError(const std::string& what) : std::runtime_error(what) {}
};

// Aggregate of one metric over seed runs. Population std, not sample std.
struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;
  int n_runs = 0;
};

MeanStd average_seed_runs(const std::vector<double>& values);

// n-th output of the SplitMix64 sequence started at `seed`.
uint64_t splitmix64(uint64_t seed, uint64_t n);

// Combines tags into a stream key so independent noise streams never overlap.
uint64_t derive_key(std::initializer_list<uint64_t> tags);
uint64_t derive_key(uint64_t base, const std::string& tag);

// Counter-based generator: value i of a stream depends only on (key, i), so
// generation order never affects the bytes written to disk.
class CounterRng {
 public:
  explicit CounterRng(uint64_t key) : key_(key) {}

  uint64_t bits(uint64_t counter) const { return splitmix64(key_, counter); }

  // Uniform in [0, 1), 53-bit mantissa.
  double uniform(uint64_t counter) const;

  // Standard normal via Box-Muller; consumes counters 2c and 2c+1.
  double normal(uint64_t counter) const;

  // Uniform integer in [0, n).
  uint64_t below(uint64_t counter, uint64_t n) const;

 private:
  uint64_t key_;
};

// FNV-1a, used for run-record input hashes.
uint64_t fnv1a64(const void* data, size_t n);
uint64_t fnv1a64_file(const std::string& path);
std::string hex64(uint64_t v);

}  // namespace l2r2
