#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tropinv/rational.hpp"

namespace tropinv {

/// Deterministic random source. All sampling goes through the methods below so
/// that a seed pins the byte-exact output stream across platforms; nothing here
/// uses std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for item `index` of a run seeded with `seed`.
  /// Used so per-sample work is reproducible regardless of evaluation order.
  static Rng for_index(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive, via rejection sampling.
  long uniform(long lo, long hi);

  /// Uniform element of a non-empty range size.
  std::size_t index(std::size_t size) {
    return static_cast<std::size_t>(uniform(0, static_cast<long>(size) - 1));
  }

  bool coin() { return (next() & 1) != 0; }

  /// Rational p/q with p uniform in [lo*q, hi*q] for q uniform in
  /// [1, max_den]; lands in [lo, hi] with denominator at most max_den.
  Rational rational(long lo, long hi, long max_den = 8);

  /// Length-n vector of rational(lo, hi, max_den).
  std::vector<Rational> point(int n, long lo, long hi, long max_den = 8);

  /// Length-n vector of uniform(lo, hi).
  std::vector<int> int_vector(int n, long lo, long hi);

 private:
  static std::uint64_t mix(std::uint64_t x) {  // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

inline long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw DomainError("uniform: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) throw DomainError("uniform: range too wide");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

inline Rational Rng::rational(long lo, long hi, long max_den) {
  long q = uniform(1, max_den);
  long p = uniform(lo * q, hi * q);
  return Rational(p, q);
}

inline std::vector<Rational> Rng::point(int n, long lo, long hi, long max_den) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(rational(lo, hi, max_den));
  return v;
}

inline std::vector<int> Rng::int_vector(int n, long lo, long hi) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(static_cast<int>(uniform(lo, hi)));
  return v;
}

}  // namespace tropinv
