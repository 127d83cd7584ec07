#pragma once

#include <cstdint>
#include <stdexcept>

#include "dagforge/dag.hpp"
#include "dagforge/rng.hpp"

namespace dagforge {

// true iff a topological order exists (iterative in-degree peeling)
bool is_acyclic(const Dag& d);

// true iff the undirected skeleton has one component; single vertex is connected
bool is_weakly_connected(const Dag& d);

// Upper-triangular Bernoulli(p) fill plus a uniform label permutation.
// Deliberately NON-uniform over DAGs: the empty DAG alone is produced by all
// n! permutations. Kept as an experimental foil.
Dag sample_triangular(int n, std::uint64_t p_num, std::uint64_t p_den, RandomSource& rng);

struct McmcConfig {
  std::int64_t burn_in_steps = 0;
  std::int64_t thinning_steps = 1;
  // exclude all but one (i,i) pair from the proposal; slightly faster mixing
  bool prune_self_pairs = false;

  void validate() const {
    if (burn_in_steps < 0) throw std::invalid_argument("McmcConfig: burn_in_steps must be >= 0");
    if (thinning_steps < 1) throw std::invalid_argument("McmcConfig: thinning_steps must be >= 1");
  }
};

// Toggle rule for an ordered pair: delete the arc i -> j if present,
// otherwise add it unless that would close a cycle (self-pairs always
// stay). Applying the same pair twice restores the graph.
void mcmc_apply_pair(Dag& d, int i, int j);

// One chain step: draw an ordered pair (i,j) uniformly (all n^2, or
// n^2-n+1 with pruning), apply the toggle. Symmetric kernel; in place.
void mcmc_step(Dag& d, const McmcConfig& cfg, RandomSource& rng);

// burn-in from the empty DAG, returns the state reached
Dag sample_mcmc(int n, const McmcConfig& cfg, RandomSource& rng);

// Kept chain: first next_sample() runs the burn-in, later calls advance by
// thinning_steps. Burn-in choice is the caller's; O(n^4) steps is the usual
// guidance and nothing is picked silently here.
class McmcChain {
 public:
  McmcChain(int n, const McmcConfig& cfg, RandomSource rng)
      : cfg_(cfg), rng_(std::move(rng)), state_(n) {
    cfg_.validate();
  }

  const Dag& next_sample() {
    std::int64_t steps = started_ ? cfg_.thinning_steps : cfg_.burn_in_steps;
    started_ = true;
    for (std::int64_t i = 0; i < steps; ++i) mcmc_step(state_, cfg_, rng_);
    return state_;
  }

  const Dag& state() const { return state_; }

 private:
  McmcConfig cfg_;
  RandomSource rng_;
  Dag state_;
  bool started_ = false;
};

}  // namespace dagforge
