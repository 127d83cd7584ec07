#include "dagforge/sample_limit.hpp"

#include <cassert>
#include <stdexcept>

namespace dagforge {

namespace {

// relative occurrence of k outpoints in large DAGs, times 1e10; the eight
// entries sum to exactly 1e10
constexpr std::array<std::int64_t, 8> kAFixed = {0, 5743623733LL, 3662136732LL, 564645435LL,
                                                 29023072LL,      566517LL,     4496LL,
                                                 15LL};

int draw_fixed_point(const std::array<std::int64_t, 8>& row, RandomSource& rng) {
  std::int64_t r = static_cast<std::int64_t>(rng.below(kFixedPointOne)) + 1;
  std::int64_t acc = 0;
  for (int k = 1; k <= 7; ++k) {
    acc += row[k];
    if (acc >= r) return k;
  }
  assert(false && "fixed-point rows sum to 1e10");
  return 7;
}

}  // namespace

LimitTables build_limit_tables(int n_switch) {
  if (n_switch < 8)
    throw std::invalid_argument("build_limit_tables: n_switch must be >= 8 (tail truncates at k = 7)");
  LimitTables lt;
  lt.n_switch = n_switch;
  lt.a_fixed = kAFixed;
  for (int k = 1; k <= 7; ++k) lt.A[k] = static_cast<double>(kAFixed[k]) / kFixedPointOne;

  for (int k = 1; k <= 7; ++k) {
    // exact integer weights on the common denominator 2^{7k} * 1e10:
    // u_s = A_s_fixed (2^k - 1)^s 2^{k(7-s)}
    BigInt q = pow2(k) - 1;
    std::array<BigInt, 8> u;
    BigInt total = 0;
    for (int s = 1; s <= 7; ++s) {
      u[s] = BigInt(kAFixed[s]) * ipow(q, s) * pow2(static_cast<unsigned long>(k) * (7 - s));
      total += u[s];
    }
    lt.Z[k] = BigRat(total, pow2(7ul * k) * BigInt(kFixedPointOne)).get_d();

    // round half up onto the 1e-10 grid; assign the rounding residue to s = 1
    std::int64_t grid_sum = 0;
    for (int s = 1; s <= 7; ++s) {
      BigInt rounded = (u[s] * kFixedPointOne * 2 + total) / (2 * total);
      lt.b_fixed[k][s] = rounded.get_si();
      grid_sum += lt.b_fixed[k][s];
      lt.B[k][s] = BigRat(u[s], total).get_d();
    }
    lt.b_fixed[k][1] += kFixedPointOne - grid_sum;
  }
  return lt;
}

OutpointSequence sample_outpoint_sequence_hybrid(int n, const LimitTables& lt,
                                                 const CountTable& table, RandomSource& rng) {
  if (table.n_max < lt.n_switch)
    throw std::invalid_argument("hybrid sampler: table must cover n_switch");
  if (table.variant != TableVariant::unrestricted)
    throw std::invalid_argument("hybrid sampler: needs the unrestricted table");
  if (n < 1) throw std::invalid_argument("hybrid sampler: n must be >= 1");
  if (n <= lt.n_switch) return sample_outpoint_sequence(n, table, rng);

  OutpointSequence seq;
  int remaining = n;
  int prev_k = 0;
  while (remaining > lt.n_switch) {
    int k = prev_k == 0 ? draw_fixed_point(lt.a_fixed, rng)
                        : draw_fixed_point(lt.b_fixed[prev_k], rng);
    seq.layers.push_back(k);
    remaining -= k;
    prev_k = k;
  }

  // exact conditional tail, conditioned on the last limit-regime layer
  int m = remaining;
  int k = prev_k;
  while (m > 0) {
    BigInt q = pow2(k) - 1;
    BigInt total = 0;
    for (int s = 1; s <= m; ++s)
      total += ipow(q, s) * pow2(static_cast<unsigned long>(k) * (m - s)) * table.a(m, s);
    BigInt r = draw_uniform_bigint(total, rng);
    BigInt acc = 0;
    int chosen = 0;
    for (int s = 1; s <= m; ++s) {
      acc += ipow(q, s) * pow2(static_cast<unsigned long>(k) * (m - s)) * table.a(m, s);
      if (acc >= r) {
        chosen = s;
        break;
      }
    }
    assert(chosen >= 1);
    seq.layers.push_back(chosen);
    m -= chosen;
    k = chosen;
  }
  assert(seq.total_nodes() == n);
  return seq;
}

Dag sample_large_dag(int n, const LimitTables& lt, const CountTable& table, RandomSource& rng) {
  OutpointSequence seq = sample_outpoint_sequence_hybrid(n, lt, table, rng);
  return permute_labels(reconstruct_dag(seq, rng), rng);
}

}  // namespace dagforge
