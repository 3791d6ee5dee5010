#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace adelic {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Folds a sequence of keys into one stream index.
std::uint64_t mix_keys(std::initializer_list<std::uint64_t> keys) noexcept;

// A reproducible random stream identified by (seed, stream). Identical pairs
// produce identical sequences; the engine state is derived from a hash of
// both so that neighbouring stream indices are decorrelated.
class RngStream {
 public:
  using engine_type = std::mt19937_64;

  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  // Independent child stream, e.g. one per prime component.
  RngStream substream(std::uint64_t key) const;

  // Uniform on the open interval (0, 1).
  double uniform_open();
  // Uniform on {0, ..., n - 1}; n must be positive.
  std::uint64_t uniform_below(std::uint64_t n);

  engine_type& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  engine_type engine_;
};

}  // namespace adelic
