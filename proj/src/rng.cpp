#include "dagforge/rng.hpp"

#include <bit>

namespace dagforge {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

RandomSource RandomSource::split(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t child = splitmix64(seed + (index + 1) * 0x9e3779b97f4a7c15ull);
  return RandomSource(child);
}

int RandomSource::count_leading_zeros(std::uint64_t v) { return std::countl_zero(v); }

}  // namespace dagforge
