#pragma once

namespace psso::stats {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);
/// Regularized incomplete beta I_x(a, b), a, b > 0, 0 <= x <= 1.
double beta_inc(double a, double b, double x);

/// P(X > x) for X ~ chi-square(df).
double chi_square_sf(double x, double df);
/// P(T <= t) for T ~ Student t(df).
double student_t_cdf(double t, double df);
/// P(|T| >= |t|).
double student_t_two_sided(double t, double df);
/// P(F <= x) for F ~ F(df1, df2).
double f_cdf(double x, double df1, double df2);
double f_sf(double x, double df1, double df2);
/// Standard normal CDF.
double normal_cdf(double z);

}  // namespace psso::stats
