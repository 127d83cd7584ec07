#pragma once

#include <cstdint>
#include <map>

#include "dagforge/oracle.hpp"

namespace dagforge {

struct TestResult {
  double statistic = 0;
  double p_value = 1;
  std::size_t cells = 0;
  // set when some expected cell count is below 5; the p-value is then shaky
  bool low_expected = false;
};

// regularized upper incomplete gamma Q(a, x); relative accuracy ~1e-12
double gamma_q(double a, double x);

// upper-tail p of a chi-square statistic with df degrees of freedom
double chi_square_p(double statistic, double df);

// Pearson goodness of fit of the histogram against expected probabilities
// over the full key space given (cells = expected.size()). Observations on
// keys outside the expected support give p = 0.
TestResult chi_square_uniformity(const Histogram& hist,
                                 const std::map<std::uint64_t, double>& expected);

// chi-square homogeneity on the union of observed keys
TestResult two_sample_test(const Histogram& a, const Histogram& b);

// empirical total variation distance to the expected distribution
double empirical_tv(const Histogram& hist, const std::map<std::uint64_t, double>& expected);

}  // namespace dagforge
