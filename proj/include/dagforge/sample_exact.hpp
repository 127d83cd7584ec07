#pragma once

#include <vector>

#include "dagforge/bigint.hpp"
#include "dagforge/counting.hpp"
#include "dagforge/dag.hpp"
#include "dagforge/rng.hpp"

namespace dagforge {

// Layer sizes k_1..k_I from repeatedly removing all outpoints; k_1 is the
// outpoint count of the full DAG and the sizes sum to n.
struct OutpointSequence {
  std::vector<int> layers;

  int total_nodes() const {
    int s = 0;
    for (int k : layers) s += k;
    return s;
  }
};

// Uniform integer on [1, bound] by bit-string rejection: draw just enough
// fair bits to cover [0, bound), retry on overshoot (acceptance > 1/2).
BigInt draw_uniform_bigint(const BigInt& bound, RandomSource& rng);

// Weighted partial-sum draw of the layer sizes against the table; works for
// every CountTable variant (each contributes its own per-step weights).
OutpointSequence sample_outpoint_sequence(int n, const CountTable& table, RandomSource& rng);

// Blockwise lower-triangular fill: blocks are placed in reverse layer order,
// old-outpoint columns get a uniform nonzero bit pattern, old non-outpoint
// columns free Bernoulli(1/2) bits. Acyclic by construction.
Dag reconstruct_dag(const OutpointSequence& seq, RandomSource& rng);

std::vector<int> random_permutation(int n, RandomSource& rng);

// relabels: result.edge(perm[u], perm[v]) == d.edge(u, v)
Dag apply_permutation(const Dag& d, const std::vector<int>& perm);

Dag permute_labels(const Dag& d, RandomSource& rng);

// Perfectly uniform: every labelled DAG on n nodes has probability 1/a_n.
Dag sample_uniform_dag(int n, const CountTable& table, RandomSource& rng);

namespace detail {

// Shared blockwise iteration for all reconstruction variants. Calls
// fill(m, k, s) for each non-innermost block, where k new rows [m, m+k) must
// connect into old columns [0, m) and the old outpoints are columns
// [m-s, m). The innermost (all-outpoint) block stays empty.
template <typename F>
void for_each_block(const OutpointSequence& seq, F&& fill) {
  int m = 0, prev = 0;
  for (auto it = seq.layers.rbegin(); it != seq.layers.rend(); ++it) {
    int k = *it;
    if (m == 0) {
      m = k;
      prev = k;
      continue;
    }
    fill(m, k, prev);
    m += k;
    prev = k;
  }
}

// uniform nonzero k-bit column pattern at `col` across rows [base, base+k)
void draw_nonzero_column(Dag& d, int base, int k, int col, RandomSource& rng);

// Bernoulli(1/2) fill of columns [0, ncols) in row `u` (row must be clear)
void fill_row_prefix(Dag& d, int u, int ncols, RandomSource& rng);

// i distinct values from [0, n), uniform without replacement
std::vector<int> sample_subset(int n, int i, RandomSource& rng);

void validate_sequence(const OutpointSequence& seq);

}  // namespace detail

}  // namespace dagforge
