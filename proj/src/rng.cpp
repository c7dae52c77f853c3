#include "evomerge/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "evomerge/errors.hpp"

namespace evomerge {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a) { return splitmix64(a); }

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ b);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return splitmix64(mix_seed(a, b) ^ c);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::gaussian() {
  // u1 in (0, 1] keeps the log finite
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::gaussian(double mean, double stddev) {
  return mean + stddev * gaussian();
}

std::uint64_t Rng::integer(std::uint64_t n) {
  // fixed-point multiply; bias is O(n / 2^64)
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(engine_()) * n) >> 64);
}

std::string Rng::save() const {
  std::ostringstream os;
  os << engine_;
  return os.str();
}

Rng Rng::restore(const std::string& state) {
  Rng rng(0);
  std::istringstream is(state);
  is >> rng.engine_;
  if (is.fail()) throw FormatError("rng state string is malformed");
  return rng;
}

}  // namespace evomerge
