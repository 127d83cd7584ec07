#include "dagforge/oracle.hpp"

#include <stdexcept>

#include "dagforge/baselines.hpp"

namespace dagforge {

DagKey dag_key(const Dag& d) {
  int n = d.n();
  if (n > 8) throw std::invalid_argument("dag_key: needs n <= 8");
  DagKey key = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d.edge(u, v)) key |= DagKey{1} << (u * n + v);
  return key;
}

Dag dag_from_key(int n, DagKey key) {
  Dag d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if ((key >> (u * n + v)) & 1) d.set_edge(u, v);
  return d;
}

std::vector<Dag> enumerate_all_dags(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumerate_all_dags: needs 1 <= n <= 5");
  std::vector<std::pair<int, int>> cells;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) cells.emplace_back(u, v);
  std::vector<Dag> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells.size()); ++bits) {
    Dag d(n);
    for (std::size_t i = 0; i < cells.size(); ++i)
      if ((bits >> i) & 1) d.set_edge(cells[i].first, cells[i].second);
    if (is_acyclic(d)) out.push_back(std::move(d));
  }
  return out;
}

int classify_outpoints(const Dag& d) {
  int c = 0;
  for (int v = 0; v < d.n(); ++v)
    if (d.in_degree(v) == 0) ++c;
  return c;
}

std::vector<std::vector<int>> canonical_layers(const Dag& d) {
  int n = d.n();
  std::vector<bool> removed(n, false);
  std::vector<std::vector<int>> layers;
  int left = n;
  while (left > 0) {
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      bool outpoint = true;
      for (int u = 0; u < n && outpoint; ++u)
        if (!removed[u] && d.edge(u, v)) outpoint = false;
      if (outpoint) layer.push_back(v);
    }
    if (layer.empty()) throw std::invalid_argument("canonical_layers: graph has a cycle");
    for (int v : layer) removed[v] = true;
    left -= static_cast<int>(layer.size());
    layers.push_back(std::move(layer));
  }
  return layers;
}

bool satisfies_layered_max_in(const Dag& d, int K, std::optional<int> K_n) {
  auto layers = canonical_layers(d);
  int depth = static_cast<int>(layers.size());
  for (int j = 0; j < depth; ++j) {
    for (int t = j + 1; t < depth; ++t) {
      for (int v : layers[t]) {
        int c = 0;
        for (int u : layers[j]) c += d.edge(u, v);
        if (t == j + 1) {
          if (c < 1 || c > K) return false;
        } else if (!K_n) {
          if (c > K) return false;
        }
      }
    }
    if (K_n) {
      for (int u : layers[j]) {
        int c = 0;
        for (int t = j + 2; t < depth; ++t)
          for (int v : layers[t]) c += d.edge(u, v);
        if (c > *K_n) return false;
      }
    }
  }
  return true;
}

}  // namespace dagforge
