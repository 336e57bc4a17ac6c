#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace netlocal {

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) throw FitError("mean of empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double median_of(std::vector<double> xs) {
  if (xs.empty()) throw FitError("median of empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

inline double sample_stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean_of(xs);
  double s = 0.0;
  for (double x : xs) s += (x - mu) * (x - mu);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

inline double standard_error(const std::vector<double>& xs) {
  return sample_stddev(xs) / std::sqrt(static_cast<double>(xs.size()));
}

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double se_intercept = 0.0;
  double se_slope = 0.0;
  double rss = 0.0;
};

// Ordinary least squares y = a + b x.
inline LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw FitError("least_squares: need >= 2 paired points");
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0) throw FitError("least_squares: degenerate x values");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    f.rss += e * e;
  }
  if (n > 2) {
    const double sigma2 = f.rss / static_cast<double>(n - 2);
    f.se_slope = std::sqrt(sigma2 / sxx);
    f.se_intercept = std::sqrt(sigma2 * (1.0 / n + mx * mx / sxx));
  }
  return f;
}

// Fit of q = A (ln n)^b against a linear-in-n alternative. The verdict asks
// for a bounded exponent and a residual (in q space) no worse than the linear
// model's; the exponent band is deliberately loose so genuinely flatter
// growth still passes.
struct FitReport {
  double amplitude = 0.0;  // A
  double exponent = 0.0;   // b
  double se_amplitude = 0.0;
  double se_exponent = 0.0;
  double rss_polylog = 0.0;  // residual sum of squares, original space
  double rss_linear = 0.0;
  bool polylog_consistent = false;
};

inline FitReport fit_polylog_exponent(const std::vector<std::pair<double, double>>& data,
                                      double exponent_band = 6.0) {
  if (data.size() < 4) throw FitError("fit_polylog_exponent: need >= 4 points");
  std::vector<double> ns, qs;
  for (const auto& [n, q] : data) {
    if (n <= 1.0) throw FitError("fit_polylog_exponent: n must exceed 1");
    if (q <= 0.0) throw FitError("fit_polylog_exponent: medians must be positive");
    ns.push_back(n);
    qs.push_back(q);
  }
  const auto [lo, hi] = std::minmax_element(ns.begin(), ns.end());
  if (*hi < 4.0 * *lo) throw FitError("fit_polylog_exponent: n range must span >= 2 octaves");

  std::vector<double> x, y;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    x.push_back(std::log(std::log(ns[i])));
    y.push_back(std::log(qs[i]));
  }
  const LinearFit logfit = least_squares(x, y);

  FitReport rep;
  rep.exponent = logfit.slope;
  rep.amplitude = std::exp(logfit.intercept);
  rep.se_exponent = logfit.se_slope;
  rep.se_amplitude = rep.amplitude * logfit.se_intercept;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double pred = rep.amplitude * std::pow(std::log(ns[i]), rep.exponent);
    rep.rss_polylog += (qs[i] - pred) * (qs[i] - pred);
  }
  const LinearFit linfit = least_squares(ns, qs);
  rep.rss_linear = linfit.rss;
  const double tol = 1e-9 * (1.0 + rep.rss_linear);
  rep.polylog_consistent =
      rep.exponent <= exponent_band && rep.rss_polylog <= rep.rss_linear + tol;
  return rep;
}

// Log-log growth slope across (n, value) points; the scale-trend summary used
// by the lower-bound demonstrations.
inline double loglog_slope(const std::vector<std::pair<double, double>>& data) {
  std::vector<double> x, y;
  for (const auto& [n, v] : data) {
    if (n <= 0 || v <= 0) throw FitError("loglog_slope: positive data required");
    x.push_back(std::log(n));
    y.push_back(std::log(v));
  }
  return least_squares(x, y).slope;
}

}  // namespace netlocal
