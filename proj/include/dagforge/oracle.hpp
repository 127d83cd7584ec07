#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dagforge/dag.hpp"

namespace dagforge {

// Row-major adjacency bits packed into 64 bits; bijective with labelled DAGs
// for n <= 8 and usable as a histogram key.
using DagKey = std::uint64_t;

DagKey dag_key(const Dag& d);
Dag dag_from_key(int n, DagKey key);

// All labelled DAGs on n nodes by filtering every off-diagonal 0/1 matrix
// through the acyclicity check. Capped at n = 5 (2^20 candidates).
std::vector<Dag> enumerate_all_dags(int n);

// number of in-degree-0 vertices; >= 1 for any DAG
int classify_outpoints(const Dag& d);

// Canonical outpoint peeling: layers[0] holds the outpoints of the full
// graph, layers[1] those of the remainder, and so on.
std::vector<std::vector<int>> canonical_layers(const Dag& d);

// The construction-level law the restricted recursions count: every old node
// receives at most K arcs from each later-added layer (old outpoints at
// least one). With K_n, the per-layer K bound applies to old outpoints only
// and every vertex sends at most K_n arcs past its immediate predecessor
// layer.
bool satisfies_layered_max_in(const Dag& d, int K, std::optional<int> K_n = std::nullopt);

struct Histogram {
  int n = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t trials = 0;

  void add(std::uint64_t key) {
    ++counts[key];
    ++trials;
  }
};

}  // namespace dagforge
