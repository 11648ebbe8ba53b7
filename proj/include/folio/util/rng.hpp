#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace folio::util {

// Deterministic PRNG stack. Everything that consumes randomness in this
// project goes through these types so that a (seed, stream tag) pair fully
// determines the output, independent of the standard library's
// distribution implementations.

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a root seed and a tag.
inline uint64_t derive_seed(uint64_t root, uint64_t tag) {
  uint64_t s = root ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
  uint64_t a = splitmix64(s);
  uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  // xoshiro256**
  uint64_t next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) without modulo bias (Lemire).
  uint64_t next_below(uint64_t bound) {
    if (bound <= 1) return 0;
    __uint128_t m = (__uint128_t)next_u64() * bound;
    uint64_t lo = (uint64_t)m;
    if (lo < bound) {
      uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = (__uint128_t)next_u64() * bound;
        lo = (uint64_t)m;
      }
    }
    return (uint64_t)(m >> 64);
  }

  int64_t next_range(int64_t lo, int64_t hi) {  // inclusive ends
    return lo + (int64_t)next_below((uint64_t)(hi - lo + 1));
  }

  double exponential(double mean) {
    double u;
    do { u = next_double(); } while (u <= 0.0);
    return -mean * std::log(u);
  }

  // Box-Muller, consuming exactly two uniforms per draw (no cached spare,
  // so draw sequence is position-independent).
  double normal(double mu, double sigma) {
    double u1;
    do { u1 = next_double(); } while (u1 <= 0.0);
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mu + sigma * r * std::cos(6.28318530717958647692 * u2);
  }

  double lognormal(double mu, double sigma) { return std::exp(normal(mu, sigma)); }

  bool chance(double p) { return next_double() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = (size_t)next_below(i);
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

// 64-bit FNV-1a with an avalanche finish; used for key placement hashing.
inline uint64_t stable_hash(std::span<const char> bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= (unsigned char)c;
    h *= 0x100000001b3ULL;
  }
  uint64_t s = h;
  return splitmix64(s);
}

}  // namespace folio::util
