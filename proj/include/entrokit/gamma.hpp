// Regularized incomplete gamma function and chi-squared tail probability.

#pragma once

namespace entrokit {

/// Regularized lower incomplete gamma P(s, x), absolute accuracy 1e-10.
///
/// Series expansion for x < s + 1, Lentz continued fraction otherwise.
/// Throws std::domain_error for s <= 0 or x < 0.
double regularized_lower_incomplete_gamma(double s, double x);

/// Upper-tail probability of the chi-squared distribution:
/// 1 - P(dof/2, statistic/2).
/// Throws std::domain_error for statistic < 0 or dof < 1.
double chi_squared_p_value(double statistic, int dof);

}  // namespace entrokit
