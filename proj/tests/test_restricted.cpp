#include <doctest.h>

#include <cmath>
#include <map>

#include "dagforge/baselines.hpp"
#include "dagforge/oracle.hpp"
#include "dagforge/restricted.hpp"
#include "dagforge/stats.hpp"

using namespace dagforge;

namespace {

std::map<std::uint64_t, double> uniform_over(const std::vector<Dag>& dags) {
  std::map<std::uint64_t, double> expected;
  for (const auto& d : dags) expected[dag_key(d)] = 1.0 / dags.size();
  return expected;
}

}  // namespace

TEST_SUITE_BEGIN("restricted");

TEST_CASE("connected sampling") {
  CountTable t = build_count_table(10);

  SUBCASE("n = 2 is uniform over the two single-arc DAGs") {
    RandomSource rng(111);
    int fwd = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
      Dag d = sample_connected_dag(2, t, rng);
      REQUIRE(d.edge_count() == 1);  // the empty DAG never comes back
      if (d.edge(0, 1)) ++fwd;
    }
    CHECK(std::abs(fwd - trials / 2) < 3.5 * std::sqrt(trials * 0.25));
  }

  SUBCASE("acceptance rate at n = 4 is the connected fraction 446/543") {
    RandomSource rng(112);
    const int trials = 20000;
    int connected = 0;
    for (int i = 0; i < trials; ++i)
      if (is_weakly_connected(sample_uniform_dag(4, t, rng))) ++connected;
    double p = 446.0 / 543.0;
    double sigma = std::sqrt(trials * p * (1 - p));
    CHECK(std::abs(connected - trials * p) < 3.5 * sigma);
  }

  SUBCASE("acceptance above 99% at n = 10") {
    RandomSource rng(113);
    const int trials = 20000;
    int connected = 0;
    for (int i = 0; i < trials; ++i)
      if (is_weakly_connected(sample_uniform_dag(10, t, rng))) ++connected;
    CHECK(connected > trials * 0.99);
  }
}

TEST_CASE("max_in sampling") {
  SUBCASE("non-binding K reproduces the uniform sampler") {
    CountTable u = build_count_table(4);
    CountTable r = build_restricted_table(4, 3);
    Histogram hu, hr;
    RandomSource ru(121), rr(122);
    for (int i = 0; i < 30000; ++i) {
      hu.add(dag_key(sample_uniform_dag(4, u, ru)));
      hr.add(dag_key(sample_max_in_dag(4, RestrictionSpec::max_in(3), r, rr)));
    }
    CHECK(two_sample_test(hu, hr).p_value > 0.001);
  }

  SUBCASE("n = 3, K = 1: every sample obeys the layer law") {
    CountTable r = build_restricted_table(3, 1);
    RandomSource rng(123);
    for (int i = 0; i < 10000; ++i)
      CHECK(satisfies_layered_max_in(sample_max_in_dag(3, RestrictionSpec::max_in(1), r, rng), 1));
  }

  SUBCASE("n = 3, K = 1: uniform over the 22 valid DAGs") {
    CountTable r = build_restricted_table(3, 1);
    std::vector<Dag> valid;
    for (const Dag& d : enumerate_all_dags(3))
      if (satisfies_layered_max_in(d, 1)) valid.push_back(d);
    REQUIRE(valid.size() == 22);
    Histogram h;
    RandomSource rng(124);
    for (int i = 0; i < 30000; ++i)
      h.add(dag_key(sample_max_in_dag(3, RestrictionSpec::max_in(1), r, rng)));
    CHECK(chi_square_uniformity(h, uniform_over(valid)).p_value > 0.001);
  }

  SUBCASE("table/spec mismatch rejected") {
    CountTable u = build_count_table(4);
    RandomSource rng(1);
    CHECK_THROWS_AS(sample_max_in_dag(3, RestrictionSpec::max_in(1), u, rng),
                    std::invalid_argument);
    CountTable r = build_restricted_table(4, 2);
    CHECK_THROWS_AS(sample_max_in_dag(3, RestrictionSpec::max_in(1), r, rng),
                    std::invalid_argument);
  }
}

TEST_CASE("max_in_out sampling") {
  CountTable r = build_restricted_table(4, 1, 1);

  SUBCASE("structural law holds on every sample") {
    RandomSource rng(131);
    for (int i = 0; i < 10000; ++i) {
      Dag d = sample_max_in_dag(4, RestrictionSpec::max_in_out(1, 1), r, rng);
      CHECK(satisfies_layered_max_in(d, 1, 1));
    }
  }

  SUBCASE("uniform over the 365 valid DAGs") {
    std::vector<Dag> valid;
    for (const Dag& d : enumerate_all_dags(4))
      if (satisfies_layered_max_in(d, 1, 1)) valid.push_back(d);
    REQUIRE(valid.size() == 365);
    Histogram h;
    RandomSource rng(132);
    for (int i = 0; i < 80000; ++i)
      h.add(dag_key(sample_max_in_dag(4, RestrictionSpec::max_in_out(1, 1), r, rng)));
    CHECK(chi_square_uniformity(h, uniform_over(valid)).p_value > 0.001);
  }
}

TEST_CASE("children-limited sampling") {
  SUBCASE("non-binding K reproduces the uniform sampler") {
    CountTable u = build_count_table(4);
    CountTable c = build_children_limited_table(4, 3);
    Histogram hu, hc;
    RandomSource ru(141), rc(142);
    for (int i = 0; i < 30000; ++i) {
      hu.add(dag_key(sample_uniform_dag(4, u, ru)));
      hc.add(dag_key(sample_children_limited_dag(4, 3, c, rc)));
    }
    CHECK(two_sample_test(hu, hc).p_value > 0.001);
  }

  SUBCASE("out-degrees stay within K on every sample") {
    CountTable c = build_children_limited_table(3, 1);
    RandomSource rng(143);
    for (int i = 0; i < 10000; ++i) {
      Dag d = sample_children_limited_dag(3, 1, c, rng);
      for (int u = 0; u < 3; ++u) CHECK(d.out_degree(u) <= 1);
    }
  }

  SUBCASE("both strategies are uniform over the 125 valid DAGs at n=4, K=1") {
    CountTable c = build_children_limited_table(4, 1);
    std::vector<Dag> valid;
    for (const Dag& d : enumerate_all_dags(4)) {
      bool ok = true;
      for (int u = 0; u < 4 && ok; ++u) ok = d.out_degree(u) <= 1;
      if (ok) valid.push_back(d);
    }
    REQUIRE(valid.size() == 125);
    auto expected = uniform_over(valid);

    ChildrenLimitedOptions force_a, force_b;
    force_a.strategy = ChildrenLimitedOptions::Strategy::conditioned_rows;
    force_b.strategy = ChildrenLimitedOptions::Strategy::mandatory_arcs;

    Histogram ha, hb;
    RandomSource ra(144), rb(145);
    const int trials = 40000;
    for (int i = 0; i < trials; ++i) {
      ha.add(dag_key(sample_children_limited_dag(4, 1, c, ra, force_a)));
      hb.add(dag_key(sample_children_limited_dag(4, 1, c, rb, force_b)));
    }
    CHECK(chi_square_uniformity(ha, expected).p_value > 0.001);
    CHECK(chi_square_uniformity(hb, expected).p_value > 0.001);
    CHECK(two_sample_test(ha, hb).p_value > 0.001);
  }

  SUBCASE("strategy B stays uniform when budgets bind (K = 2, s can exceed K)") {
    CountTable c = build_children_limited_table(4, 2);
    std::vector<Dag> valid;
    for (const Dag& d : enumerate_all_dags(4)) {
      bool ok = true;
      for (int u = 0; u < 4 && ok; ++u) ok = d.out_degree(u) <= 2;
      if (ok) valid.push_back(d);
    }
    ChildrenLimitedOptions force_b;
    force_b.strategy = ChildrenLimitedOptions::Strategy::mandatory_arcs;
    Histogram h;
    RandomSource rng(146);
    for (int i = 0; i < 60000; ++i)
      h.add(dag_key(sample_children_limited_dag(4, 2, c, rng, force_b)));
    CHECK(chi_square_uniformity(h, uniform_over(valid)).p_value > 0.001);
  }

  SUBCASE("mismatched table rejected") {
    CountTable u = build_count_table(4);
    RandomSource rng(1);
    CHECK_THROWS_AS(sample_children_limited_dag(4, 1, u, rng), std::invalid_argument);
  }
}

TEST_CASE("weighted sampling") {
  SUBCASE("p = 1/2 reproduces the uniform sampler") {
    CountTable u = build_count_table(4);
    WeightedTable w = build_weighted_table(4, BigRat(1, 2));
    Histogram hu, hw;
    RandomSource ru(151), rw(152);
    for (int i = 0; i < 30000; ++i) {
      hu.add(dag_key(sample_uniform_dag(4, u, ru)));
      hw.add(dag_key(sample_weighted_dag(4, BigRat(1, 2), w, rw)));
    }
    CHECK(two_sample_test(hu, hw).p_value > 0.001);
  }

  SUBCASE("p = 0 always returns the empty DAG") {
    WeightedTable w = build_weighted_table(5, BigRat(0));
    RandomSource rng(153);
    for (int i = 0; i < 100; ++i) CHECK(sample_weighted_dag(5, BigRat(0), w, rng).edge_count() == 0);
  }

  SUBCASE("p = 1 returns the full one-outpoint-per-layer DAG") {
    WeightedTable w = build_weighted_table(4, BigRat(1));
    RandomSource rng(154);
    for (int i = 0; i < 100; ++i) {
      Dag d = sample_weighted_dag(4, BigRat(1), w, rng);
      CHECK(d.edge_count() == max_arcs(4));
      CHECK(is_acyclic(d));
      CHECK(classify_outpoints(d) == 1);
    }
  }

  SUBCASE("n = 3, p = 1/4 matches the p^l (1-p)^(L-l) law per DAG") {
    WeightedTable w = build_weighted_table(3, BigRat(1, 4));
    // exact target: weight 3^{3-l} / 123 per DAG with l arcs
    std::map<std::uint64_t, double> expected;
    for (const Dag& d : enumerate_all_dags(3)) {
      unsigned long l = d.edge_count();
      expected[dag_key(d)] = BigRat(ipow(3, 3 - l), 123).get_d();
    }
    Histogram h;
    RandomSource rng(155);
    for (int i = 0; i < 25000; ++i) h.add(dag_key(sample_weighted_dag(3, BigRat(1, 4), w, rng)));
    CHECK(chi_square_uniformity(h, expected).p_value > 0.001);
  }

  SUBCASE("p mismatch and invalid p rejected") {
    WeightedTable w = build_weighted_table(3, BigRat(1, 4));
    RandomSource rng(1);
    CHECK_THROWS_AS(sample_weighted_dag(3, BigRat(1, 3), w, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_weighted_dag(3, BigRat(5, 4), w, rng), std::invalid_argument);
  }
}

TEST_SUITE_END();
