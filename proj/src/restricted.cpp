#include "dagforge/restricted.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "dagforge/baselines.hpp"

namespace dagforge {

namespace {

using detail::sample_subset;

// index i in [lo, hi] with weight binomial(N, i)
int draw_binomial_count(int N, int lo, int hi, RandomSource& rng) {
  BigInt total = binomial_sum(N, lo, hi);
  assert(sgn(total) > 0);
  BigInt r = draw_uniform_bigint(total, rng);
  BigInt acc = 0;
  for (int i = lo; i <= hi; ++i) {
    acc += binomial(N, i);
    if (acc >= r) return i;
  }
  assert(false && "binomial partial sums exhausted");
  return hi;
}

bool bernoulli_rat(const BigInt& num, const BigInt& den, RandomSource& rng) {
  if (sgn(num) == 0) return false;
  if (num == den) return true;
  if (den.fits_ulong_p())
    return rng.bernoulli(num.get_ui(), den.get_ui());
  return draw_uniform_bigint(den, rng) <= num;
}

// ---- children-limited reconstruction ----------------------------------

// Strategy A: row arc-counts from truncated binomials conditioned on total
// >= s, uniform placement, reject layers leaving an old outpoint uncovered.
void fill_block_conditioned_rows(Dag& d, int m, int k, int s, int K, RandomSource& rng) {
  int maxc = std::min(m, K);
  std::vector<int> counts(k);
  std::vector<std::vector<int>> picks(k);
  std::vector<int> cover(s);
  for (;;) {
    for (;;) {
      int sum = 0;
      for (int t = 0; t < k; ++t) {
        counts[t] = draw_binomial_count(m, 0, maxc, rng);
        sum += counts[t];
      }
      if (sum >= s) break;
    }
    std::fill(cover.begin(), cover.end(), 0);
    for (int t = 0; t < k; ++t) {
      picks[t] = sample_subset(m, counts[t], rng);
      for (int c : picks[t])
        if (c >= m - s) ++cover[c - (m - s)];
    }
    if (std::find(cover.begin(), cover.end(), 0) != cover.end()) continue;
    for (int t = 0; t < k; ++t)
      for (int c : picks[t]) d.set_edge(m + t, c);
    return;
  }
}

// Strategy B: one mandatory arc per old outpoint first. Source rows are
// uniform over all k rows with a restart when a row budget is exceeded, so
// every feasible assignment is equally likely; a second acceptance step
// equalizes the remaining-arc mass across assignments, and the final 1/F
// acceptance (F = product of old-outpoint in-counts) undoes the
// multiplicity with which a configuration can be reached.
void fill_block_mandatory_arcs(Dag& d, int m, int k, int s, int K, RandomSource& rng) {
  BigInt n0 = binomial_sum(m, 0, std::min(m, K));
  std::vector<int> src(s), load(k), incnt(s);
  std::vector<char> used(m);
  std::vector<std::vector<int>> extra(k);
  for (;;) {
    std::fill(load.begin(), load.end(), 0);
    bool feasible = true;
    for (int o = 0; o < s && feasible; ++o) {
      src[o] = static_cast<int>(rng.below(k));
      if (++load[src[o]] > K) feasible = false;
    }
    if (!feasible) continue;

    BigInt num = 1, den = 1;
    for (int t = 0; t < k; ++t) {
      if (load[t] == 0) continue;
      num *= binomial_sum(m - load[t], 0, std::min(m - load[t], K - load[t]));
      den *= n0;
    }
    if (num != den && draw_uniform_bigint(den, rng) > num) continue;

    for (int t = 0; t < k; ++t) {
      int avail = m - load[t];
      int budget = std::min(avail, K - load[t]);
      int cnt = budget >= 0 ? draw_binomial_count(avail, 0, budget, rng) : 0;
      std::fill(used.begin(), used.end(), 0);
      for (int o = 0; o < s; ++o)
        if (src[o] == t) used[m - s + o] = 1;
      std::vector<int> cols;
      cols.reserve(avail);
      for (int c = 0; c < m; ++c)
        if (!used[c]) cols.push_back(c);
      extra[t].clear();
      for (int idx : sample_subset(avail, cnt, rng)) extra[t].push_back(cols[idx]);
    }

    std::fill(incnt.begin(), incnt.end(), 1);
    for (int t = 0; t < k; ++t)
      for (int c : extra[t])
        if (c >= m - s) ++incnt[c - (m - s)];
    BigInt f_over = 1;
    for (int l : incnt) f_over *= l;
    if (f_over > 1 && draw_uniform_bigint(f_over, rng) != 1) continue;

    for (int o = 0; o < s; ++o) d.set_edge(m + src[o], m - s + o);
    for (int t = 0; t < k; ++t)
      for (int c : extra[t]) d.set_edge(m + t, c);
    return;
  }
}

}  // namespace

Dag sample_connected_dag(int n, const CountTable& table, RandomSource& rng) {
  for (;;) {
    Dag d = sample_uniform_dag(n, table, rng);
    if (is_weakly_connected(d)) return d;
  }
}

Dag sample_max_in_dag(int n, const RestrictionSpec& spec, const CountTable& table,
                      RandomSource& rng) {
  bool match =
      (spec.kind == RestrictionSpec::Kind::max_in && table.variant == TableVariant::max_in &&
       spec.K == table.K) ||
      (spec.kind == RestrictionSpec::Kind::max_in_out &&
       table.variant == TableVariant::max_in_out && spec.K == table.K && spec.K_n == table.K_n);
  if (!match)
    throw std::invalid_argument("sample_max_in_dag: spec does not match the table variant");
  if (n < 1 || n > table.n_max)
    throw std::invalid_argument("sample_max_in_dag: n out of range for table");

  OutpointSequence seq = sample_outpoint_sequence(n, table, rng);
  Dag d(n);
  bool row_wise_rest = spec.kind == RestrictionSpec::Kind::max_in_out;
  detail::for_each_block(seq, [&](int m, int k, int s) {
    for (int v = m - s; v < m; ++v) {
      int i = draw_binomial_count(k, 1, std::min(k, table.K), rng);
      for (int t : sample_subset(k, i, rng)) d.set_edge(m + t, v);
    }
    if (!row_wise_rest) {
      for (int v = 0; v < m - s; ++v) {
        int i = draw_binomial_count(k, 0, std::min(k, table.K), rng);
        for (int t : sample_subset(k, i, rng)) d.set_edge(m + t, v);
      }
    } else {
      for (int t = 0; t < k; ++t) {
        int i = draw_binomial_count(m - s, 0, std::min(m - s, table.K_n), rng);
        for (int c : sample_subset(m - s, i, rng)) d.set_edge(m + t, c);
      }
    }
  });
  return permute_labels(d, rng);
}

Dag sample_children_limited_dag(int n, int K, const CountTable& table, RandomSource& rng,
                                const ChildrenLimitedOptions& opts) {
  if (K < 1) throw std::invalid_argument("sample_children_limited_dag: K must be >= 1");
  if (table.variant != TableVariant::max_children || table.K != K)
    throw std::invalid_argument("sample_children_limited_dag: table variant mismatch");
  if (n < 1 || n > table.n_max)
    throw std::invalid_argument("sample_children_limited_dag: n out of range for table");

  OutpointSequence seq = sample_outpoint_sequence(n, table, rng);
  Dag d(n);
  detail::for_each_block(seq, [&](int m, int k, int s) {
    auto strategy = opts.strategy;
    if (strategy == ChildrenLimitedOptions::Strategy::automatic) {
      auto it = table.c_cache.find(std::make_tuple(k, m, s));
      BigInt c = it != table.c_cache.end() ? it->second : c_link_count(k, m, s, K);
      BigInt first = ipow(binomial_sum(m, 0, std::min(m, K)), k);
      double proxy = BigRat(c, first).get_d();
      strategy = proxy < opts.switch_threshold
                     ? ChildrenLimitedOptions::Strategy::mandatory_arcs
                     : ChildrenLimitedOptions::Strategy::conditioned_rows;
    }
    if (strategy == ChildrenLimitedOptions::Strategy::conditioned_rows)
      fill_block_conditioned_rows(d, m, k, s, K, rng);
    else
      fill_block_mandatory_arcs(d, m, k, s, K, rng);
  });
  return permute_labels(d, rng);
}

OutpointSequence sample_outpoint_sequence_weighted(int n, const WeightedTable& table,
                                                   RandomSource& rng) {
  if (n < 1 || n > table.n_max)
    throw std::invalid_argument("sample_outpoint_sequence_weighted: n out of range");
  OutpointSequence seq;
  BigInt r = draw_uniform_bigint(table.total_int(n), rng);
  BigInt acc = 0;
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    acc += table.a_int(n, i);
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
    BigInt hit = ipow(table.den, k) - ipow(table.q, k);
    auto weight = [&](int s) -> BigInt {
      return ipow(hit, s) * ipow(table.den, static_cast<unsigned long>(k) * (m - s)) *
             table.a_int(m, s);
    };
    BigInt total = 0;
    for (int s = 1; s <= m; ++s) total += weight(s);
    assert(sgn(total) > 0);
    r = draw_uniform_bigint(total, rng);
    acc = 0;
    int chosen = 0;
    for (int s = 1; s <= m; ++s) {
      acc += weight(s);
      if (acc >= r) {
        chosen = s;
        break;
      }
    }
    assert(chosen >= 1);
    seq.layers.push_back(chosen);
    cur_n = m;
    k = chosen;
  }
  return seq;
}

Dag sample_weighted_dag(int n, const BigRat& p, const WeightedTable& table, RandomSource& rng) {
  if (p < 0 || p > 1) throw std::invalid_argument("sample_weighted_dag: p must be in [0,1]");
  BigRat pc = p;
  pc.canonicalize();
  if (pc != table.p) throw std::invalid_argument("sample_weighted_dag: p does not match table");
  if (n < 1 || n > table.n_max)
    throw std::invalid_argument("sample_weighted_dag: n out of range for table");

  OutpointSequence seq = sample_outpoint_sequence_weighted(n, table, rng);
  Dag d(n);
  detail::for_each_block(seq, [&](int m, int k, int s) {
    // old outpoints: k-bit pattern with Bernoulli(p) entries conditioned
    // nonzero, drawn as ones-count (weight binom(k,j) num^j q^{k-j}) then
    // uniform placement
    for (int v = m - s; v < m; ++v) {
      BigInt total = 0;
      for (int j = 1; j <= k; ++j)
        total += binomial(k, j) * ipow(table.num, j) * ipow(table.q, k - j);
      BigInt r = draw_uniform_bigint(total, rng);
      BigInt acc = 0;
      int ones = 0;
      for (int j = 1; j <= k; ++j) {
        acc += binomial(k, j) * ipow(table.num, j) * ipow(table.q, k - j);
        if (acc >= r) {
          ones = j;
          break;
        }
      }
      for (int t : sample_subset(k, ones, rng)) d.set_edge(m + t, v);
    }
    for (int v = 0; v < m - s; ++v)
      for (int t = 0; t < k; ++t)
        if (bernoulli_rat(table.num, table.den, rng)) d.set_edge(m + t, v);
  });
  return permute_labels(d, rng);
}

}  // namespace dagforge
