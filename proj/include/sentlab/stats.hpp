#pragma once

namespace sentlab::stats {

// Regularized incomplete beta function I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

// P(T <= x) for Student's t with `df` degrees of freedom.
double student_cdf(double x, double df);

// Two-tailed p-value, 2 * (1 - CDF(|t|)) = I_{df/(df+t^2)}(df/2, 1/2).
double student_two_tailed_p(double t, double df);

// Central mass 2 * CDF(|t|) - 1; complement of the two-tailed p-value.
double student_central_mass(double t, double df);

}  // namespace sentlab::stats
