#include "dagforge/counting.hpp"

#include <cassert>
#include <stdexcept>

namespace dagforge {

std::string variant_name(TableVariant v) {
  switch (v) {
    case TableVariant::unrestricted: return "unrestricted";
    case TableVariant::max_in: return "max_in";
    case TableVariant::max_in_out: return "max_in_out";
    case TableVariant::max_children: return "max_children";
  }
  return "?";
}

std::size_t CountTable::index(int n, int k) const {
  assert(n >= 1 && n <= n_max && k >= 1 && k <= n);
  return static_cast<std::size_t>(n - 1) * n / 2 + (k - 1);
}

const BigInt& CountTable::total(int n) const {
  assert(n >= 1 && n <= n_max);
  return totals_[n];
}

void CountTable::allocate(int n_max_arg) {
  n_max = n_max_arg;
  std::size_t cells = static_cast<std::size_t>(n_max) * (n_max + 1) / 2;
  a_.assign(cells, BigInt{});
  b_.assign(cells, BigInt{});
  totals_.assign(n_max + 1, BigInt{});
}

void CountTable::recompute_totals() {
  for (int n = 1; n <= n_max; ++n) {
    BigInt t = 0;
    for (int k = 1; k <= n; ++k) t += a(n, k);
    totals_[n] = t;
  }
}

std::size_t WeightedTable::index(int n, int k) const {
  assert(n >= 1 && n <= n_max && k >= 1 && k <= n);
  return static_cast<std::size_t>(n - 1) * n / 2 + (k - 1);
}

const BigInt& WeightedTable::total_int(int n) const {
  assert(n >= 1 && n <= n_max);
  return totals_[n];
}

void WeightedTable::allocate(int n_max_arg) {
  n_max = n_max_arg;
  std::size_t cells = static_cast<std::size_t>(n_max) * (n_max + 1) / 2;
  a_.assign(cells, BigInt{});
  b_.assign(cells, BigInt{});
  totals_.assign(n_max + 1, BigInt{});
}

void WeightedTable::recompute_totals() {
  for (int n = 1; n <= n_max; ++n) {
    BigInt t = 0;
    for (int k = 1; k <= n; ++k) t += a_int(n, k);
    totals_[n] = t;
  }
}

BigRat WeightedTable::a_hat(int n, int k) const {
  BigRat r(a_int(n, k), ipow(den, max_arcs(n)));
  r.canonicalize();
  return r;
}

BigRat WeightedTable::total_hat(int n) const {
  BigRat r(total_int(n), ipow(den, max_arcs(n)));
  r.canonicalize();
  return r;
}

BigInt binomial_sum(int n, int lo, int hi) {
  BigInt s = 0;
  for (int i = lo; i <= hi; ++i) s += binomial(n, i);
  return s;
}

namespace {

void check_build_args(int n_max, int cap) {
  if (n_max < 1) throw std::invalid_argument("table build: n_max must be >= 1");
  if (n_max > cap)
    throw std::invalid_argument("table build: n_max exceeds cap (" + std::to_string(cap) +
                                "); raise the cap explicitly or use the hybrid sampler");
}

}  // namespace

CountTable build_count_table(int n_max, int cap) {
  check_build_args(n_max, cap);
  CountTable t;
  t.variant = TableVariant::unrestricted;
  t.allocate(n_max);
  BigInt scratch;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      int m = n - k;
      if (m == 0) {
        t.b_mut(n, k) = 1;  // the DAG with no arcs
      } else {
        // Horner form of sum_s (2^k-1)^s 2^{k(m-s)} a(m,s), descending in s:
        // S <- (2^k-1) (a(m,s) 2^{k(m-s)} + S). Multiplying by 2^k - 1 is a
        // shift and subtract, so the whole inner loop runs on linear-cost
        // big-integer ops; this keeps the O(n^4) bound practical.
        BigInt sum = 0;
        for (int s = m; s >= 1; --s) {
          scratch = t.a(m, s);
          scratch <<= static_cast<unsigned long>(k) * (m - s);
          scratch += sum;
          sum = scratch << k;
          sum -= scratch;
        }
        t.b_mut(n, k) = sum;
      }
      t.a_mut(n, k) = binomial(n, k) * t.b(n, k);
    }
  }
  t.recompute_totals();
  return t;
}

BigInt total_inclusion_exclusion(int n, const CountTable& table) {
  if (table.variant != TableVariant::unrestricted)
    throw std::invalid_argument("total_inclusion_exclusion: needs an unrestricted table");
  if (n < 1 || n > table.n_max)
    throw std::invalid_argument("total_inclusion_exclusion: n out of range");
  BigInt acc = 0;
  for (int k = 1; k <= n; ++k) {
    BigInt prev = (n - k == 0) ? BigInt(1) : table.total(n - k);
    BigInt term = binomial(n, k) * pow2(static_cast<unsigned long>(k) * (n - k)) * prev;
    if (k % 2 == 1)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

double asymptotic_ratio(int n, const CountTable& table, double M, double q) {
  if (n < 1 || n > table.n_max)
    throw std::invalid_argument("asymptotic_ratio: n out of range");
  // exact rational throughout; doubles are dyadic so the conversion is lossless
  BigRat r(table.total(n));
  r *= BigRat(M);
  r *= rat_pow(BigRat(q), n);
  r /= BigRat(factorial(n));
  r /= BigRat(pow2(max_arcs(n)));
  return r.get_d();
}

CountTable build_restricted_table(int n_max, int K, std::optional<int> K_n, int cap) {
  check_build_args(n_max, cap);
  if (K < 1) throw std::invalid_argument("build_restricted_table: K must be >= 1");
  if (K_n && *K_n < 0) throw std::invalid_argument("build_restricted_table: K_n must be >= 0");
  CountTable t;
  t.variant = K_n ? TableVariant::max_in_out : TableVariant::max_in;
  t.K = K;
  t.K_n = K_n.value_or(0);
  t.allocate(n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      int m = n - k;
      if (m == 0) {
        t.b_mut(n, k) = 1;
      } else {
        BigInt w1 = binomial_sum(k, 1, std::min(k, K));
        BigInt sum = 0;
        if (!K_n) {
          BigInt w0 = w1 + 1;
          BigInt w1s = w1;
          BigInt w0p = ipow(w0, m - 1);
          for (int s = 1; s <= m; ++s) {
            sum += w1s * w0p * t.a(m, s);
            if (s < m) {
              w1s *= w1;
              mpz_divexact(w0p.get_mpz_t(), w0p.get_mpz_t(), w0.get_mpz_t());
            }
          }
        } else {
          for (int s = 1; s <= m; ++s) {
            BigInt w0 = binomial_sum(m - s, 0, std::min(m - s, *K_n));
            sum += ipow(w1, s) * ipow(w0, k) * t.a(m, s);
          }
        }
        t.b_mut(n, k) = sum;
      }
      t.a_mut(n, k) = binomial(n, k) * t.b(n, k);
    }
  }
  t.recompute_totals();
  return t;
}

namespace {

const BigInt& c_link_memo(int k, int m, int s, int K,
                          std::map<std::tuple<int, int, int>, BigInt>& cache) {
  auto key = std::make_tuple(k, m, s);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BigInt val;
  if (m == 0) {
    val = 1;  // C(k,0,0,K): empty product
  } else {
    val = ipow(binomial_sum(m, 0, std::min(m, K)), k);
    for (int i = 1; i <= s; ++i)
      val -= binomial(s, i) * c_link_memo(k, m - i, s - i, K, cache);
  }
  return cache.emplace(key, std::move(val)).first->second;
}

}  // namespace

BigInt c_link_count(int k, int m, int s, int K) {
  if (k < 1) throw std::invalid_argument("c_link_count: k must be >= 1");
  if (K < 1) throw std::invalid_argument("c_link_count: K must be >= 1");
  if (s < 0 || s > m) throw std::invalid_argument("c_link_count: need 0 <= s <= m");
  std::map<std::tuple<int, int, int>, BigInt> cache;
  return c_link_memo(k, m, s, K, cache);
}

CountTable build_children_limited_table(int n_max, int K, int cap) {
  check_build_args(n_max, cap);
  if (K < 1) throw std::invalid_argument("build_children_limited_table: K must be >= 1");
  CountTable t;
  t.variant = TableVariant::max_children;
  t.K = K;
  t.allocate(n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      int m = n - k;
      if (m == 0) {
        t.b_mut(n, k) = 1;
      } else {
        BigInt sum = 0;
        for (int s = 1; s <= m; ++s)
          sum += c_link_memo(k, m, s, K, t.c_cache) * t.a(m, s);
        t.b_mut(n, k) = sum;
      }
      t.a_mut(n, k) = binomial(n, k) * t.b(n, k);
    }
  }
  t.recompute_totals();
  return t;
}

void populate_c_cache(CountTable& t) {
  if (t.variant != TableVariant::max_children)
    throw std::invalid_argument("populate_c_cache: table is not max_children");
  for (int n = 2; n <= t.n_max; ++n)
    for (int k = 1; k < n; ++k)
      for (int s = 1; s <= n - k; ++s) c_link_memo(k, n - k, s, t.K, t.c_cache);
}

WeightedTable build_weighted_table(int n_max, const BigRat& p, int cap) {
  check_build_args(n_max, cap);
  if (p < 0 || p > 1) throw std::invalid_argument("build_weighted_table: p must be in [0,1]");
  WeightedTable t;
  t.p = p;
  t.p.canonicalize();
  t.num = t.p.get_num();
  t.den = t.p.get_den();
  t.q = t.den - t.num;
  t.allocate(n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      int m = n - k;
      if (m == 0) {
        // scaled (1-p)^{L_n}; 0^0 = 1 keeps a_hat(1,1) = 1 even at p = 1
        t.b_mut(n, k) = ipow(t.q, max_arcs(n));
        t.a_mut(n, k) = t.b_int(n, k);
        continue;
      }
      // scaled recursion: (den^k - q^k)^s den^{k(m-s)} replace the
      // (2^k-1)^s 2^{k(m-s)} factors of the uniform case
      BigInt hit = ipow(t.den, k) - ipow(t.q, k);
      BigInt sum = 0;
      for (int s = 1; s <= m; ++s)
        sum += ipow(hit, s) * ipow(t.den, static_cast<unsigned long>(k) * (m - s)) *
               t.a_int(m, s);
      t.b_mut(n, k) = ipow(t.q, max_arcs(k)) * sum;
      t.a_mut(n, k) = binomial(n, k) * t.b_int(n, k);
    }
  }
  t.recompute_totals();
  return t;
}

}  // namespace dagforge
