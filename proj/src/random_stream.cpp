#include "gebayes/random_stream.hpp"

#include <cmath>

namespace gebayes {

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

std::uint64_t mix_bits(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t cell_index,
                       std::uint64_t replication) {
  const std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = mix_bits(base_seed + golden * (cell_index + 1));
  return mix_bits(z ^ (golden * (replication + 1)));
}

}  // namespace gebayes
