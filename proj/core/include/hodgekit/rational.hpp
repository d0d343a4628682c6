#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hodgekit {

// Exact rational scalar used everywhere. All identities in this project are
// sign identities; nothing here may ever go through floating point.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

// Canonical "num" or "num/den" string, the only numeric format in JSON output.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc = 1, b = base;
  while (e) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

inline Int int_pow2(unsigned e) {
  Int r = 1;
  r <<= e;
  return r;
}

inline Rat factorial_rat(unsigned n) {
  Rat r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= (long)i;
  return r;
}

// Deterministic RNG for property tests and seeded model generation.
// splitmix64; identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi] inclusive
  long uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("uniform: empty range");
    std::uint64_t span = (std::uint64_t)(hi - lo) + 1;
    return lo + (long)(u64() % span);
  }

  // small nonzero rational, numerator in [-m, m]\{0}, denominator in [1, d]
  Rat small_rat(long m = 5, long d = 3) {
    long num = 0;
    while (num == 0) num = uniform(-m, m);
    return rat(num, uniform(1, d));
  }

  Rat small_rat_or_zero(long m = 5, long d = 3) {
    long num = uniform(-m, m);
    return num == 0 ? Rat(0) : rat(num, uniform(1, d));
  }

 private:
  std::uint64_t state_;
};

}  // namespace hodgekit
