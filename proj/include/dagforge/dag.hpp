#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dagforge {

// Labelled digraph on n vertices as a row-major bit matrix.
// edge(u, v) means an arc u -> v; the diagonal stays zero.
class Dag {
 public:
  Dag() = default;
  explicit Dag(int n)
      : n_(n), wpr_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * wpr_, 0) {}

  int n() const { return n_; }

  bool edge(int u, int v) const {
    return (bits_[row_offset(u) + v / 64] >> (v % 64)) & 1;
  }
  void set_edge(int u, int v) { bits_[row_offset(u) + v / 64] |= std::uint64_t{1} << (v % 64); }
  void clear_edge(int u, int v) { bits_[row_offset(u) + v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  // direct word access for bulk fills and scans
  std::uint64_t* row(int u) { return bits_.data() + row_offset(u); }
  const std::uint64_t* row(int u) const { return bits_.data() + row_offset(u); }
  int words_per_row() const { return wpr_; }

  std::size_t edge_count() const;
  int out_degree(int u) const;
  int in_degree(int v) const;

  // all arcs as (u, v), ascending
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  std::size_t row_offset(int u) const { return static_cast<std::size_t>(u) * wpr_; }

  int n_ = 0;
  int wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace dagforge
