#pragma once

#include <array>
#include <cstdint>

#include "dagforge/counting.hpp"
#include "dagforge/dag.hpp"
#include "dagforge/rng.hpp"
#include "dagforge/sample_exact.hpp"

namespace dagforge {

// Limiting outpoint distribution A_k at 1e-10 resolution (k = 1..7; A_8 is
// ~2.2e-12 and excluded at this accuracy), with the derived conditionals
// B_{s|k} = (1 - 2^-k)^s A_s / Z_k. Index 0 of every array is unused.
//
// Probability arithmetic for the draws is 10-decimal fixed point on the
// integer grid itself, so the hybrid sampler is bit-for-bit reproducible.
struct LimitTables {
  int n_switch = 20;

  std::array<std::int64_t, 8> a_fixed{};                // A_k * 1e10
  std::array<std::array<std::int64_t, 8>, 8> b_fixed{};  // B_{s|k} * 1e10, rounded

  std::array<double, 8> A{};
  std::array<double, 8> Z{};
  std::array<std::array<double, 8>, 8> B{};
};

inline constexpr std::int64_t kFixedPointOne = 10'000'000'000LL;

LimitTables build_limit_tables(int n_switch = 20);

// Layer sizes from the limiting tables while more than n_switch nodes
// remain, then the exact conditional partial sums for the tail. At
// n <= n_switch this is the exact sampler unchanged.
OutpointSequence sample_outpoint_sequence_hybrid(int n, const LimitTables& lt,
                                                 const CountTable& table, RandomSource& rng);

// O(n^2): hybrid sequence + blockwise reconstruction + label permutation.
Dag sample_large_dag(int n, const LimitTables& lt, const CountTable& table, RandomSource& rng);

}  // namespace dagforge
