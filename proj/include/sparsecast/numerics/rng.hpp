#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sparsecast {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard, so raw draws are bitwise identical across platforms; the
/// distribution maps are hand-rolled here because std:: distributions are
/// implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static constexpr const char* algorithm() { return "mt19937_64/canonical-v1"; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }

  std::uint64_t next_u64() {
    ++position_;
    return engine_();
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Standard normal via Marsaglia's polar method (no trig, pairs cached).
  double normal();

  /// Uniform integer in [0, n) by rejection, bias-free.
  std::uint64_t uniform_int(std::uint64_t n);

  /// Deterministic Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t position_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 mix of a base seed and a stream id, for carving independent
/// substreams (weight init, edge sampling, shuffling) out of one user seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace sparsecast
