#include "dagforge/dag.hpp"

#include <bit>

namespace dagforge {

std::size_t Dag::edge_count() const {
  std::size_t c = 0;
  for (std::uint64_t w : bits_) c += std::popcount(w);
  return c;
}

int Dag::out_degree(int u) const {
  int c = 0;
  const std::uint64_t* r = row(u);
  for (int w = 0; w < wpr_; ++w) c += std::popcount(r[w]);
  return c;
}

int Dag::in_degree(int v) const {
  int c = 0;
  for (int u = 0; u < n_; ++u) c += edge(u, v);
  return c;
}

std::vector<std::pair<int, int>> Dag::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    const std::uint64_t* r = row(u);
    for (int w = 0; w < wpr_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.emplace_back(u, w * 64 + b);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

}  // namespace dagforge
