#pragma once

#include <cstdint>

namespace equidist {

// Counter-based generator: slot i maps to mix64(seed + (i+1)*gamma), the
// splitmix64 finalizer over an affine counter walk.  Random access by slot
// index means parallel samplers can partition the counter space and still
// reproduce the sequential stream byte for byte.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t start = 0)
      : seed_(seed), counter_(start) {}

  std::uint64_t at(std::uint64_t i) const {
    std::uint64_t z = seed_ + (i + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double unit_at(std::uint64_t i) const { return to_unit(at(i)); }

  std::uint64_t next() { return at(counter_++); }
  double next_unit() { return to_unit(next()); }

  std::uint64_t position() const { return counter_; }
  void seek(std::uint64_t i) { counter_ = i; }
  std::uint64_t seed() const { return seed_; }

  // Derived stream with an independent counter space.
  CounterRng substream(std::uint64_t salt) const {
    CounterRng s(seed_ ^ 0xD1B54A32D192ED03ull, 0);
    return CounterRng(s.at(salt), 0);
  }

  static double to_unit(std::uint64_t w) { return double(w >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace equidist
