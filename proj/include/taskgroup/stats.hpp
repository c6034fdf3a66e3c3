#pragma once

#include <cstddef>

namespace taskgroup {

/// Regularized incomplete beta function I_x(a, b), computed with the
/// continued-fraction expansion (modified Lentz iteration).
double regularized_incomplete_beta(double x, double a, double b);

/// CDF of Student's t distribution with `dof` degrees of freedom.
double student_t_cdf(double t, double dof);

/// Two-sided p-value for a t statistic with `dof` degrees of freedom.
double two_sided_t_pvalue(double t, double dof);

/// Two-sided p-value for a sample Pearson correlation r over n points, from
/// t = r*sqrt(n-2)/sqrt(1-r^2) against the t distribution with n-2 dof.
double pearson_two_sided_pvalue(double r, std::size_t n);

}  // namespace taskgroup
