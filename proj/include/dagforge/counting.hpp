#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dagforge/bigint.hpp"

namespace dagforge {

// Beyond this the dense tables get impractical; the hybrid sampler is the
// intended path for larger n. Callers may raise the cap explicitly.
inline constexpr int kDefaultTableCap = 200;

enum class TableVariant { unrestricted, max_in, max_in_out, max_children };

std::string variant_name(TableVariant v);

// Triangular arrays a(n,k) = #DAGs on n nodes with k outpoints (possibly
// under a restriction), b(n,k) = a(n,k)/binomial(n,k), and row totals.
// A built table is immutable and safe to share across samplers.
class CountTable {
 public:
  TableVariant variant = TableVariant::unrestricted;
  int n_max = 0;
  int K = 0;    // restricted variants
  int K_n = 0;  // max_in_out only

  // linking counts C(k,m,s,K); populated for max_children only
  std::map<std::tuple<int, int, int>, BigInt> c_cache;

  const BigInt& a(int n, int k) const { return a_[index(n, k)]; }
  const BigInt& b(int n, int k) const { return b_[index(n, k)]; }
  const BigInt& total(int n) const;

  // storage helpers for builders and the cache loader
  BigInt& a_mut(int n, int k) { return a_[index(n, k)]; }
  BigInt& b_mut(int n, int k) { return b_[index(n, k)]; }
  void allocate(int n_max);
  void recompute_totals();

 private:
  std::size_t index(int n, int k) const;
  std::vector<BigInt> a_, b_;
  std::vector<BigInt> totals_;  // totals_[n], totals_[0] unused
};

// Exact-rational weighted counts for edge probability p = num/den.
// Entries are stored scaled by den^{L_n} (L_n = n(n-1)/2), which makes them
// integers; a_hat() exposes the rational view. q = den - num.
class WeightedTable {
 public:
  int n_max = 0;
  BigRat p;
  BigInt num, den, q;

  const BigInt& a_int(int n, int k) const { return a_[index(n, k)]; }
  const BigInt& b_int(int n, int k) const { return b_[index(n, k)]; }
  const BigInt& total_int(int n) const;

  BigRat a_hat(int n, int k) const;
  BigRat total_hat(int n) const;

  BigInt& a_mut(int n, int k) { return a_[index(n, k)]; }
  BigInt& b_mut(int n, int k) { return b_[index(n, k)]; }
  void allocate(int n_max);
  void recompute_totals();

 private:
  std::size_t index(int n, int k) const;
  std::vector<BigInt> a_, b_;
  std::vector<BigInt> totals_;
};

// Unrestricted table: b(n,k) = sum_s (2^k-1)^s 2^{k(m-s)} a(m,s) with
// m = n-k, a(n,k) = binomial(n,k) b(n,k), a(n,n) = 1.
CountTable build_count_table(int n_max, int cap = kDefaultTableCap);

// Inclusion-exclusion total; must equal table.total(n) exactly.
BigInt total_inclusion_exclusion(int n, const CountTable& table);

// Refined from the exact tables (q is steady to 16 digits by n ~ 38, and M
// agrees with the limiting single-outpoint fraction). The literature quotes
// them as 0.574... and 1.48...; three digits are far too coarse here because
// the q error compounds as q^n.
inline constexpr double kAsymptoticM = 0.5743623733093;
inline constexpr double kAsymptoticQ = 1.4880785455997102;

// a_n M q^n / (n! 2^L); approaches 1 for large n. Diagnostic only.
double asymptotic_ratio(int n, const CountTable& table, double M = kAsymptoticM,
                        double q = kAsymptoticQ);

// At most K arcs into each old node per added layer; with K_n, each new node
// also sends at most K_n arcs to old non-outpoints (and the per-layer K bound
// then applies to old outpoints only).
CountTable build_restricted_table(int n_max, int K, std::optional<int> K_n = std::nullopt,
                                  int cap = kDefaultTableCap);

// Ways of linking k new outpoints to m old nodes (s of them old outpoints,
// each hit at least once) with at most K arcs per new node.
BigInt c_link_count(int k, int m, int s, int K);

CountTable build_children_limited_table(int n_max, int K, int cap = kDefaultTableCap);

// fill t.c_cache with every (k, m, s) the sequence sampler can request
void populate_c_cache(CountTable& t);

WeightedTable build_weighted_table(int n_max, const BigRat& p, int cap = kDefaultTableCap);

// sum of binomial(n, i) for lo <= i <= hi (empty range gives 0)
BigInt binomial_sum(int n, int lo, int hi);

}  // namespace dagforge
