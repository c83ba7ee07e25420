#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tube {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for a named sub-task; independent of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(master ^ mix64(h));
}

// Deterministic across platforms: mt19937_64 is fully specified and bounded
// integers use rejection sampling rather than std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = gen_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tube
