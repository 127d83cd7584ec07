#include "dagforge/sample_exact.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace dagforge {

BigInt draw_uniform_bigint(const BigInt& bound, RandomSource& rng) {
  if (sgn(bound) <= 0)
    throw std::invalid_argument("draw_uniform_bigint: bound must be >= 1");
  if (bound == 1) return 1;
  std::size_t t = bit_length(bound - 1);
  std::vector<std::uint64_t> words((t + 63) / 64);
  BigInt v;
  for (;;) {
    std::fill(words.begin(), words.end(), 0);
    for (std::size_t i = 0; i < t; ++i)
      if (rng.bit()) words[i / 64] |= std::uint64_t{1} << (i % 64);
    mpz_import(v.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
    if (v < bound) return v + 1;
  }
}

namespace {

// Per-step layer weight given the previous layer size k over m remaining
// nodes; mirrors the table's own recursion term for the matching variant.
BigInt layer_weight(const CountTable& t, int k, int m, int s) {
  switch (t.variant) {
    case TableVariant::unrestricted:
      return ipow(pow2(k) - 1, s) * pow2(static_cast<unsigned long>(k) * (m - s)) * t.a(m, s);
    case TableVariant::max_in: {
      BigInt w1 = binomial_sum(k, 1, std::min(k, t.K));
      return ipow(w1, s) * ipow(w1 + 1, m - s) * t.a(m, s);
    }
    case TableVariant::max_in_out: {
      BigInt w1 = binomial_sum(k, 1, std::min(k, t.K));
      BigInt w0 = binomial_sum(m - s, 0, std::min(m - s, t.K_n));
      return ipow(w1, s) * ipow(w0, k) * t.a(m, s);
    }
    case TableVariant::max_children: {
      auto it = t.c_cache.find(std::make_tuple(k, m, s));
      BigInt c = it != t.c_cache.end() ? it->second : c_link_count(k, m, s, t.K);
      return c * t.a(m, s);
    }
  }
  throw std::logic_error("layer_weight: unknown variant");
}

}  // namespace

OutpointSequence sample_outpoint_sequence(int n, const CountTable& table, RandomSource& rng) {
  if (n < 1 || n > table.n_max)
    throw std::invalid_argument("sample_outpoint_sequence: n out of range for table");
  OutpointSequence seq;
  // first layer: partial sums of a(n, k) against a draw from [1, total(n)]
  BigInt r = draw_uniform_bigint(table.total(n), rng);
  BigInt acc = 0;
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    acc += table.a(n, i);
    if (acc >= r) {
      k = i;
      break;
    }
  }
  assert(k >= 1);
  seq.layers.push_back(k);

  int cur_n = n;
  while (k < cur_n) {
    int m = cur_n - k;
    r = draw_uniform_bigint(table.b(cur_n, k), rng);
    acc = 0;
    int s = 0;
    for (int i = 1; i <= m; ++i) {
      acc += layer_weight(table, k, m, i);
      if (acc >= r) {
        s = i;
        break;
      }
    }
    assert(s >= 1);
    seq.layers.push_back(s);
    cur_n = m;
    k = s;
  }
  assert(seq.total_nodes() == n);
  return seq;
}

namespace detail {

void validate_sequence(const OutpointSequence& seq) {
  if (seq.layers.empty()) throw std::invalid_argument("OutpointSequence: empty");
  for (int k : seq.layers)
    if (k < 1) throw std::invalid_argument("OutpointSequence: layer sizes must be >= 1");
}

void draw_nonzero_column(Dag& d, int base, int k, int col, RandomSource& rng) {
  if (k <= 62) {
    std::uint64_t pattern = rng.below((std::uint64_t{1} << k) - 1) + 1;
    for (int t = 0; t < k; ++t)
      if ((pattern >> t) & 1) d.set_edge(base + t, col);
    return;
  }
  // Bernoulli bits with columnwise all-zero rejection
  std::vector<std::uint64_t> words((k + 63) / 64);
  for (;;) {
    std::uint64_t any = 0;
    for (int w = 0; w < static_cast<int>(words.size()); ++w) {
      std::uint64_t bits = rng.word();
      if ((w + 1) * 64 > k) bits &= (~std::uint64_t{0}) >> (64 - k % 64);
      words[w] = bits;
      any |= bits;
    }
    if (any) break;
  }
  for (int t = 0; t < k; ++t)
    if ((words[t / 64] >> (t % 64)) & 1) d.set_edge(base + t, col);
}

void fill_row_prefix(Dag& d, int u, int ncols, RandomSource& rng) {
  std::uint64_t* r = d.row(u);
  int full = ncols / 64, rem = ncols % 64;
  for (int w = 0; w < full; ++w) r[w] = rng.word();
  // the tail word may already hold outpoint-column bits above ncols
  if (rem) r[full] |= rng.word() & ((~std::uint64_t{0}) >> (64 - rem));
}

std::vector<int> sample_subset(int n, int i, RandomSource& rng) {
  assert(i <= n);
  std::vector<int> scratch(n);
  std::iota(scratch.begin(), scratch.end(), 0);
  for (int j = 0; j < i; ++j) {
    std::uint64_t pick = j + rng.below(n - j);
    std::swap(scratch[j], scratch[pick]);
  }
  scratch.resize(i);
  return scratch;
}

}  // namespace detail

Dag reconstruct_dag(const OutpointSequence& seq, RandomSource& rng) {
  detail::validate_sequence(seq);
  Dag d(seq.total_nodes());
  detail::for_each_block(seq, [&](int m, int k, int s) {
    for (int v = m - s; v < m; ++v) detail::draw_nonzero_column(d, m, k, v, rng);
    for (int t = 0; t < k; ++t) detail::fill_row_prefix(d, m + t, m - s, rng);
  });
  return d;
}

std::vector<int> random_permutation(int n, RandomSource& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i >= 1; --i) {
    std::uint64_t j = rng.below(static_cast<std::uint64_t>(i) + 1);
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

Dag apply_permutation(const Dag& d, const std::vector<int>& perm) {
  Dag out(d.n());
  for (int u = 0; u < d.n(); ++u) {
    const std::uint64_t* r = d.row(u);
    for (int w = 0; w < d.words_per_row(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        out.set_edge(perm[u], perm[v]);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

Dag permute_labels(const Dag& d, RandomSource& rng) {
  return apply_permutation(d, random_permutation(d.n(), rng));
}

Dag sample_uniform_dag(int n, const CountTable& table, RandomSource& rng) {
  OutpointSequence seq = sample_outpoint_sequence(n, table, rng);
  return permute_labels(reconstruct_dag(seq, rng), rng);
}

}  // namespace dagforge
