#include "dagforge/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dagforge {

namespace {

// series expansion of P(a,x), valid for x < a+1
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 1000; ++i) {
    ap += 1;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// continued fraction for Q(a,x) (modified Lentz), valid for x >= a+1
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1 - a;
  double c = 1 / tiny;
  double d = 1 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
  if (a <= 0 || x < 0) throw std::invalid_argument("gamma_q: needs a > 0, x >= 0");
  if (x == 0) return 1;
  if (x < a + 1) return 1 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_p(double statistic, double df) {
  if (df <= 0) return 1;
  return gamma_q(df / 2, statistic / 2);
}

TestResult chi_square_uniformity(const Histogram& hist,
                                 const std::map<std::uint64_t, double>& expected) {
  TestResult res;
  res.cells = expected.size();
  if (res.cells < 2 || hist.trials == 0)
    throw std::invalid_argument("chi_square_uniformity: need >= 2 cells and observations");
  for (const auto& [key, c] : hist.counts) {
    if (!expected.contains(key)) {
      res.statistic = std::numeric_limits<double>::infinity();
      res.p_value = 0;
      return res;
    }
  }
  double stat = 0;
  for (const auto& [key, prob] : expected) {
    double exp_count = prob * static_cast<double>(hist.trials);
    if (exp_count < 5) res.low_expected = true;
    if (exp_count <= 0) {
      if (hist.counts.contains(key)) {
        res.statistic = std::numeric_limits<double>::infinity();
        res.p_value = 0;
        return res;
      }
      continue;
    }
    auto it = hist.counts.find(key);
    double obs = it == hist.counts.end() ? 0.0 : static_cast<double>(it->second);
    double diff = obs - exp_count;
    stat += diff * diff / exp_count;
  }
  res.statistic = stat;
  res.p_value = chi_square_p(stat, static_cast<double>(res.cells - 1));
  return res;
}

TestResult two_sample_test(const Histogram& a, const Histogram& b) {
  if (a.trials == 0 || b.trials == 0)
    throw std::invalid_argument("two_sample_test: both samples need observations");
  std::map<std::uint64_t, std::pair<double, double>> cells;
  for (const auto& [key, c] : a.counts) cells[key].first = static_cast<double>(c);
  for (const auto& [key, c] : b.counts) cells[key].second = static_cast<double>(c);

  TestResult res;
  res.cells = cells.size();
  if (res.cells < 2) {
    // both samples concentrated on one key: indistinguishable
    res.p_value = 1;
    return res;
  }
  double ta = static_cast<double>(a.trials), tb = static_cast<double>(b.trials);
  double grand = ta + tb;
  double stat = 0;
  for (const auto& [key, obs] : cells) {
    double rowsum = obs.first + obs.second;
    double ea = rowsum * ta / grand;
    double eb = rowsum * tb / grand;
    if (ea < 5 || eb < 5) res.low_expected = true;
    stat += (obs.first - ea) * (obs.first - ea) / ea;
    stat += (obs.second - eb) * (obs.second - eb) / eb;
  }
  res.statistic = stat;
  res.p_value = chi_square_p(stat, static_cast<double>(res.cells - 1));
  return res;
}

double empirical_tv(const Histogram& hist, const std::map<std::uint64_t, double>& expected) {
  double tv = 0;
  double trials = static_cast<double>(hist.trials);
  for (const auto& [key, prob] : expected) {
    auto it = hist.counts.find(key);
    double freq = it == hist.counts.end() ? 0.0 : static_cast<double>(it->second) / trials;
    tv += std::fabs(freq - prob);
  }
  for (const auto& [key, c] : hist.counts)
    if (!expected.contains(key)) tv += static_cast<double>(c) / trials;
  return tv / 2;
}

}  // namespace dagforge
