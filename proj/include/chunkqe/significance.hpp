#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace chunkqe {

/// Regularised incomplete beta I_x(a, b), continued fraction (modified Lentz).
double incomplete_beta(double a, double b, double x);

/// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double student_t_two_tailed(double t, double df);

/// "***" for p < 0.01, "**" for p < 0.05, "*" for p < 0.1, "" otherwise.
std::string_view significance_stars(double p);

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
  std::size_t n = 0;
  /// Non-zero differences with zero variance: t is infinite and p is 0.
  bool degenerate = false;

  std::string_view stars() const { return significance_stars(p); }
};

/// Paired two-tailed t-test on aligned per-query values (a - b), n - 1 degrees
/// of freedom. All-zero differences give t = 0, p = 1. Throws when the sizes
/// differ or n < 2.
TTestResult paired_ttest(std::span<const double> a, std::span<const double> b);

}  // namespace chunkqe
