#include <doctest.h>

#include <map>

#include "dagforge/baselines.hpp"
#include "dagforge/counting.hpp"
#include "dagforge/oracle.hpp"
#include "dagforge/stats.hpp"

using namespace dagforge;

TEST_SUITE_BEGIN("oracle_stats");

TEST_CASE("enumeration sizes equal the count-table totals") {
  CountTable t = build_count_table(5);
  const std::size_t expected[] = {0, 1, 3, 25, 543, 29281};
  for (int n = 1; n <= 5; ++n) {
    auto dags = enumerate_all_dags(n);
    CHECK(dags.size() == expected[n]);
    CHECK(BigInt(static_cast<unsigned long>(dags.size())) == t.total(n));
  }
  CHECK_THROWS_AS(enumerate_all_dags(6), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all_dags(0), std::invalid_argument);
}

TEST_CASE("outpoint classification") {
  CHECK(classify_outpoints(Dag(4)) == 4);
  Dag chain(3);
  chain.set_edge(0, 1);
  chain.set_edge(1, 2);
  CHECK(classify_outpoints(chain) == 1);

  SUBCASE("histogram over the enumeration equals the a(n,k) rows") {
    CountTable t = build_count_table(5);
    for (int n = 3; n <= 5; ++n) {
      std::map<int, long> hist;
      for (const Dag& d : enumerate_all_dags(n)) ++hist[classify_outpoints(d)];
      for (int k = 1; k <= n; ++k) CHECK(BigInt(hist[k]) == t.a(n, k));
    }
  }
}

TEST_CASE("dag keys round trip") {
  for (int n : {1, 3, 4}) {
    for (const Dag& d : enumerate_all_dags(n)) {
      CHECK(dag_from_key(n, dag_key(d)) == d);
    }
  }
  Dag big(9);
  CHECK_THROWS_AS(dag_key(big), std::invalid_argument);
}

TEST_CASE("canonical peeling") {
  Dag chain(3);
  chain.set_edge(0, 1);
  chain.set_edge(1, 2);
  auto layers = canonical_layers(chain);
  REQUIRE(layers.size() == 3);
  CHECK(layers[0] == std::vector<int>{0});
  CHECK(layers[1] == std::vector<int>{1});
  CHECK(layers[2] == std::vector<int>{2});

  Dag cyc(2);
  cyc.set_edge(0, 1);
  cyc.set_edge(1, 0);
  CHECK_THROWS_AS(canonical_layers(cyc), std::invalid_argument);
}

TEST_CASE("layered filter counts equal the restricted tables") {
  // the filter checks the construction-level law the recursions count
  for (int n = 2; n <= 4; ++n) {
    auto dags = enumerate_all_dags(n);
    for (int K = 1; K <= 2; ++K) {
      long filt = 0;
      for (const Dag& d : dags)
        if (satisfies_layered_max_in(d, K)) ++filt;
      CHECK(BigInt(filt) == build_restricted_table(n, K).total(n));
      for (int Kn = 0; Kn <= 1; ++Kn) {
        long filt2 = 0;
        for (const Dag& d : dags)
          if (satisfies_layered_max_in(d, K, Kn)) ++filt2;
        CHECK(BigInt(filt2) == build_restricted_table(n, K, Kn).total(n));
      }
    }
  }
}

TEST_CASE("out-degree filter equals the children-limited tables") {
  for (int n = 2; n <= 5; ++n) {
    for (int K = 1; K <= 2; ++K) {
      long filt = 0;
      for (const Dag& d : enumerate_all_dags(n)) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) ok = d.out_degree(u) <= K;
        if (ok) ++filt;
      }
      CHECK(BigInt(filt) == build_children_limited_table(n, K).total(n));
    }
  }
}

TEST_CASE("weighted totals equal the enumeration mass") {
  // sum over DAGs of num^l q^{L-l} == scaled weighted total
  for (auto [num, den] : {std::pair{1, 4}, std::pair{1, 2}, std::pair{2, 3}}) {
    WeightedTable w = build_weighted_table(4, BigRat(num, den));
    for (int n = 2; n <= 4; ++n) {
      BigInt mass = 0;
      unsigned long L = max_arcs(n);
      for (const Dag& d : enumerate_all_dags(n)) {
        unsigned long l = d.edge_count();
        mass += ipow(w.num, l) * ipow(w.q, L - l);
      }
      CHECK(mass == w.total_int(n));
    }
  }
}

TEST_CASE("gamma_q against frozen reference values") {
  // chi2.sf(x, df) from an independent implementation
  CHECK(chi_square_p(30.0, 24) == doctest::Approx(0.184751799024).epsilon(1e-9));
  CHECK(chi_square_p(51.179, 24) == doctest::Approx(0.000999880434238).epsilon(1e-9));
  CHECK(chi_square_p(600.0, 542) == doctest::Approx(0.0424881417978).epsilon(1e-9));
  CHECK(chi_square_p(13.8155, 2) == doctest::Approx(0.001000005279).epsilon(1e-9));
  CHECK(chi_square_p(3.0, 10) == doctest::Approx(0.981424063778).epsilon(1e-9));
}

TEST_CASE("chi-square goodness of fit") {
  std::map<std::uint64_t, double> expected{{0, 0.5}, {1, 0.25}, {2, 0.25}};

  SUBCASE("exactly proportional counts give statistic 0, p = 1") {
    Histogram h;
    for (int i = 0; i < 500; ++i) h.add(0);
    for (int i = 0; i < 250; ++i) h.add(1);
    for (int i = 0; i < 250; ++i) h.add(2);
    auto res = chi_square_uniformity(h, expected);
    CHECK(res.statistic == 0);
    CHECK(res.p_value == 1);
    CHECK(!res.low_expected);
  }

  SUBCASE("observation outside the support gives p = 0") {
    Histogram h;
    h.add(0);
    h.add(7);
    CHECK(chi_square_uniformity(h, expected).p_value == 0);
  }

  SUBCASE("thin cells raise the low_expected flag") {
    Histogram h;
    for (int i = 0; i < 10; ++i) h.add(0);
    h.add(1);
    CHECK(chi_square_uniformity(h, expected).low_expected);
  }
}

TEST_CASE("two-sample homogeneity") {
  SUBCASE("identical histograms are indistinguishable") {
    Histogram a, b;
    for (int i = 0; i < 400; ++i) {
      a.add(i % 4);
      b.add(i % 4);
    }
    auto res = two_sample_test(a, b);
    CHECK(res.statistic == 0);
    CHECK(res.p_value == 1);
  }

  SUBCASE("clearly different histograms are detected") {
    Histogram a, b;
    for (int i = 0; i < 1000; ++i) a.add(i % 2);
    for (int i = 0; i < 1000; ++i) b.add(i % 4);
    CHECK(two_sample_test(a, b).p_value < 1e-6);
  }
}

TEST_CASE("empirical tv") {
  std::map<std::uint64_t, double> expected{{0, 0.5}, {1, 0.5}};
  Histogram h;
  for (int i = 0; i < 100; ++i) h.add(0);
  for (int i = 0; i < 100; ++i) h.add(1);
  CHECK(empirical_tv(h, expected) == doctest::Approx(0.0));
  Histogram g;
  for (int i = 0; i < 200; ++i) g.add(0);
  CHECK(empirical_tv(g, expected) == doctest::Approx(0.5));
}

TEST_SUITE_END();
