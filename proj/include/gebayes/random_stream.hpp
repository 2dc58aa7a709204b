#pragma once

#include <cstdint>
#include <random>

namespace gebayes {

// Seedable random stream used by every stochastic routine in the library.
// A stream is an explicit parameter everywhere; it is not safe to share one
// stream across threads.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  // Uniform draw strictly inside (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal draw (Marsaglia polar, cached spare).
  double normal();

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// 64-bit splitmix-style finalizer.
std::uint64_t mix_bits(std::uint64_t z);

// Derives an independent, individually reproducible seed for one replication
// of one simulation cell.
std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t cell_index,
                       std::uint64_t replication);

}  // namespace gebayes
