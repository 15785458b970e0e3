#pragma once

#include <cstdint>
#include <random>

#include "plr/rectangle.hpp"

namespace plr {

/// Deterministic seeded stream: identical seeds reproduce identical outputs.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }

  /// Uniform on [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Suite A: `attempts` uniform triples from [r]x[s]x[n], each added unless
/// it clashes with the partial rectangle built so far.
PartialLatinRectangle gen_set_a(int r, int s, int n, int attempts, RngStream& rng);

/// Random Latin square of order n: +-1 moves on the 0/1 incidence cube
/// starting from the cyclic square, passing through improper states, and
/// continuing past the budget until the state is proper.
PartialLatinRectangle jacobson_matthews(int n, long moves, RngStream& rng);

inline long default_jm_moves(int n) { return 10L * n * n * n; }

/// Suite B: an order-n random Latin square truncated to its first r rows and
/// s columns, with uniformly random entries deleted down to target_entries.
PartialLatinRectangle gen_set_b(int r, int s, int n, int target_entries, RngStream& rng);

}  // namespace plr
