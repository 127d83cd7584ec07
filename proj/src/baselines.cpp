#include "dagforge/baselines.hpp"

#include <bit>
#include <numeric>
#include <vector>

#include "dagforge/sample_exact.hpp"

namespace dagforge {

namespace {

template <typename F>
void for_each_out_neighbor(const Dag& d, int u, F&& f) {
  const std::uint64_t* r = d.row(u);
  for (int w = 0; w < d.words_per_row(); ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      f(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
}

// would adding u -> v close a cycle, i.e. is u reachable from v?
bool reaches(const Dag& d, int from, int target) {
  if (from == target) return true;
  std::vector<std::uint64_t> seen(d.words_per_row(), 0);
  std::vector<int> stack{from};
  seen[from / 64] |= std::uint64_t{1} << (from % 64);
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    bool hit = false;
    for_each_out_neighbor(d, u, [&](int v) {
      if (v == target) hit = true;
      if (!((seen[v / 64] >> (v % 64)) & 1)) {
        seen[v / 64] |= std::uint64_t{1} << (v % 64);
        stack.push_back(v);
      }
    });
    if (hit) return true;
  }
  return false;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_acyclic(const Dag& d) {
  int n = d.n();
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    for_each_out_neighbor(d, u, [&](int v) { ++indeg[v]; });
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int peeled = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++peeled;
    for_each_out_neighbor(d, u, [&](int v) {
      if (--indeg[v] == 0) stack.push_back(v);
    });
  }
  return peeled == n;
}

bool is_weakly_connected(const Dag& d) {
  int n = d.n();
  if (n <= 1) return true;
  Dsu dsu(n);
  for (int u = 0; u < n; ++u)
    for_each_out_neighbor(d, u, [&](int v) { dsu.unite(u, v); });
  int root = dsu.find(0);
  for (int v = 1; v < n; ++v)
    if (dsu.find(v) != root) return false;
  return true;
}

Dag sample_triangular(int n, std::uint64_t p_num, std::uint64_t p_den, RandomSource& rng) {
  if (p_den == 0 || p_num > p_den)
    throw std::invalid_argument("sample_triangular: need 0 <= p <= 1");
  Dag d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p_num, p_den)) d.set_edge(u, v);
  return permute_labels(d, rng);
}

void mcmc_apply_pair(Dag& d, int i, int j) {
  if (i == j) return;  // a self-loop is a cycle: stay
  if (d.edge(i, j)) {
    d.clear_edge(i, j);  // deletions never create cycles
    return;
  }
  if (!reaches(d, j, i)) d.set_edge(i, j);
}

void mcmc_step(Dag& d, const McmcConfig& cfg, RandomSource& rng) {
  int n = d.n();
  std::uint64_t nn = static_cast<std::uint64_t>(n) * n;
  int i, j;
  for (;;) {
    std::uint64_t pair = rng.below(nn);
    i = static_cast<int>(pair / n);
    j = static_cast<int>(pair % n);
    if (!cfg.prune_self_pairs || i != j || i == 0) break;
  }
  mcmc_apply_pair(d, i, j);
}

Dag sample_mcmc(int n, const McmcConfig& cfg, RandomSource& rng) {
  cfg.validate();
  Dag d(n);
  for (std::int64_t t = 0; t < cfg.burn_in_steps; ++t) mcmc_step(d, cfg, rng);
  return d;
}

}  // namespace dagforge
