#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace dagforge {

// Deterministic bit source. Same seed + same call sequence yields the same
// stream on every platform: mt19937_64 output is fully specified by the
// standard, and bounded draws below use masked rejection rather than
// implementation-defined distributions.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Child stream for sample `index`, independent of draws on the parent.
  // Uses the splitmix64 output function so streams don't correlate.
  static RandomSource split(std::uint64_t seed, std::uint64_t index);

  std::uint64_t word() { return engine_(); }

  // single fair bit, buffered 64 at a time
  bool bit() {
    if (bits_left_ == 0) {
      bit_buffer_ = engine_();
      bits_left_ = 64;
    }
    bool b = bit_buffer_ & 1;
    bit_buffer_ >>= 1;
    --bits_left_;
    ++bits_served_;
    return b;
  }

  // uniform on [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("RandomSource::below: n must be positive");
    if (n == 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> count_leading_zeros(n - 1);
    for (;;) {
      std::uint64_t v = engine_() & mask;
      if (v < n) return v;
    }
  }

  // exact Bernoulli(num/den)
  bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  // bits handed out through bit(); used by tests to account for consumption
  std::uint64_t bits_served() const { return bits_served_; }

 private:
  static int count_leading_zeros(std::uint64_t v);

  std::mt19937_64 engine_;
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
  std::uint64_t bits_served_ = 0;
};

}  // namespace dagforge
