#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace evomerge {

// splitmix64 finalizer; used to derive independent stream seeds from
// (base seed, stream id, index) tuples.
std::uint64_t mix_seed(std::uint64_t a);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

// Seeded generator for doubles. Every draw is an explicit transform of raw
// mt19937_64 output, so the stream position is captured entirely by the
// engine state and save()/restore() round-trips exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1), 53-bit resolution
  double uniform();
  // [lo, hi)
  double uniform(double lo, double hi);
  // standard normal via Box-Muller; consumes exactly two engine draws
  double gaussian();
  double gaussian(double mean, double stddev);
  // [0, n)
  std::uint64_t integer(std::uint64_t n);

  std::string save() const;
  static Rng restore(const std::string& state);

  bool operator==(const Rng& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace evomerge
