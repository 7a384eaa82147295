#include "l2r2/common.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace l2r2 {

MeanStd average_seed_runs(const std::vector<double>& values) {
  if (values.empty()) {
    throw ValidationError("average_seed_runs: empty value list");
  }
  MeanStd out;
  out.n_runs = static_cast<int>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) {
    const double d = v - out.mean;
    sq += d * d;
  }
  out.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return out;
}

uint64_t splitmix64(uint64_t seed, uint64_t n) {
  uint64_t z = seed + (n + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t derive_key(std::initializer_list<uint64_t> tags) {
  uint64_t key = 0x243F6A8885A308D3ULL;  // arbitrary non-zero start
  for (uint64_t t : tags) key = splitmix64(key, t);
  return key;
}

uint64_t derive_key(uint64_t base, const std::string& tag) {
  uint64_t key = splitmix64(base, 0xABCDEF);
  for (unsigned char c : tag) key = splitmix64(key, c);
  return key;
}

double CounterRng::uniform(uint64_t counter) const {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

double CounterRng::normal(uint64_t counter) const {
  const double u1 = uniform(2 * counter);
  const double u2 = uniform(2 * counter + 1);
  const double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 < 1, so finite
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t CounterRng::below(uint64_t counter, uint64_t n) const {
  return bits(counter) % n;
}

uint64_t fnv1a64(const void* data, size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 0xCBF29CE484222325ULL;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeError("cannot open file for hashing: " + path);
  uint64_t h = 0xCBF29CE484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const auto got = static_cast<size_t>(in.gcount());
    for (size_t i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001B3ULL;
    }
    if (!in) break;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace l2r2
