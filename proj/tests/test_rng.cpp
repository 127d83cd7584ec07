#include <doctest.h>

#include "dagforge/rng.hpp"
#include "dagforge/sample_exact.hpp"

using namespace dagforge;

TEST_SUITE_BEGIN("rng");

TEST_CASE("same seed, same stream") {
  RandomSource a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.word() == b.word());
  RandomSource c(42), d(43);
  bool all_equal = true;
  for (int i = 0; i < 16; ++i) all_equal &= c.word() == d.word();
  CHECK(!all_equal);
}

TEST_CASE("split streams differ from parent and each other") {
  RandomSource a = RandomSource::split(7, 0);
  RandomSource b = RandomSource::split(7, 1);
  RandomSource c = RandomSource::split(7, 0);
  CHECK(a.word() != b.word());
  RandomSource a2 = RandomSource::split(7, 0);
  CHECK(a2.word() == c.word());
}

TEST_CASE("below stays in range and covers the range") {
  RandomSource rng(1);
  std::array<int, 5> seen{};
  for (int i = 0; i < 1000; ++i) {
    auto v = rng.below(5);
    REQUIRE(v < 5);
    ++seen[v];
  }
  for (int c : seen) CHECK(c > 0);
  CHECK(rng.below(1) == 0);
  CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}

TEST_CASE("draw_uniform_bigint basics") {
  RandomSource rng(5);
  SUBCASE("bound 1 is always 1 and consumes nothing") {
    auto before = rng.bits_served();
    for (int i = 0; i < 10; ++i) CHECK(draw_uniform_bigint(1, rng) == 1);
    CHECK(rng.bits_served() == before);
  }
  SUBCASE("power-of-two bound consumes exactly t bits, no rejection") {
    for (unsigned t : {1u, 3u, 64u, 65u, 200u}) {
      auto before = rng.bits_served();
      BigInt v = draw_uniform_bigint(pow2(t), rng);
      CHECK(rng.bits_served() - before == t);
      CHECK(v >= 1);
      CHECK(v <= pow2(t));
    }
  }
  SUBCASE("bound 0 rejected") { CHECK_THROWS_AS(draw_uniform_bigint(0, rng), std::invalid_argument); }
}

TEST_CASE("draw_uniform_bigint frequencies at bound 3") {
  RandomSource rng(11);
  std::array<int, 4> seen{};
  for (int i = 0; i < 30000; ++i) ++seen[draw_uniform_bigint(3, rng).get_ui()];
  // binomial concentration: 10000 +- 300 covers ~3.7 sigma
  for (int v = 1; v <= 3; ++v) {
    CHECK(seen[v] > 9700);
    CHECK(seen[v] < 10300);
  }
}

TEST_CASE("draw_uniform_bigint hits every value of a wide bound") {
  RandomSource rng(3);
  BigInt bound("1000000000000000000000");  // > 64 bits
  for (int i = 0; i < 200; ++i) {
    BigInt v = draw_uniform_bigint(bound, rng);
    REQUIRE(v >= 1);
    REQUIRE(v <= bound);
  }
}

TEST_SUITE_END();
