#pragma once

#include <optional>

#include "dagforge/counting.hpp"
#include "dagforge/dag.hpp"
#include "dagforge/rng.hpp"
#include "dagforge/sample_exact.hpp"

namespace dagforge {

struct RestrictionSpec {
  enum class Kind { connected, max_in, max_in_out, max_children, weighted };
  Kind kind = Kind::connected;
  int K = 0;
  int K_n = 0;
  BigRat p;

  static RestrictionSpec connected() { return {Kind::connected, 0, 0, {}}; }
  static RestrictionSpec max_in(int K) { return {Kind::max_in, K, 0, {}}; }
  static RestrictionSpec max_in_out(int K, int K_n) { return {Kind::max_in_out, K, K_n, {}}; }
  static RestrictionSpec max_children(int K) { return {Kind::max_children, K, 0, {}}; }
  static RestrictionSpec weighted(const BigRat& p) { return {Kind::weighted, 0, 0, p}; }
};

// Rejection over the uniform sampler; acceptance is 82% at n = 4 and above
// 99% for n > 8, so this beats any recursive enumeration of connected DAGs.
Dag sample_connected_dag(int n, const CountTable& table, RandomSource& rng);

// Uniform over DAGs obeying the per-layer bound(s) the table counts. The
// spec's kind and parameters must match the table variant.
Dag sample_max_in_dag(int n, const RestrictionSpec& spec, const CountTable& table,
                      RandomSource& rng);

struct ChildrenLimitedOptions {
  enum class Strategy {
    automatic,
    conditioned_rows,  // strategy A: conditioned row totals, reject uncovered outpoints
    mandatory_arcs,    // strategy B: one forced arc per old outpoint, accept with 1/F
  };
  Strategy strategy = Strategy::automatic;
  // automatic picks mandatory_arcs when C(k,m,s,K) / (first term of its
  // recursion) drops below this; both strategies are exact, only speed moves
  double switch_threshold = 0.1;
};

// Uniform over DAGs with every out-degree <= K.
Dag sample_children_limited_dag(int n, int K, const CountTable& table, RandomSource& rng,
                                const ChildrenLimitedOptions& opts = {});

// DAG probability proportional to p^l (1-p)^{L-l} over an underlying uniform
// space, via the weighted tables. p = 0 and p = 1 degenerate as expected.
Dag sample_weighted_dag(int n, const BigRat& p, const WeightedTable& table, RandomSource& rng);

// weighted analogue of sample_outpoint_sequence
OutpointSequence sample_outpoint_sequence_weighted(int n, const WeightedTable& table,
                                                   RandomSource& rng);

}  // namespace dagforge
