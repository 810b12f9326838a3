#pragma once

namespace wafomlab {

/// Standard normal quantile (Wichura's AS 241, PPND16), about 1e-16 relative
/// accuracy. Throws DomainError unless 0 < u < 1.
double inverse_normal_cdf(double u);

/// Standard normal distribution function via erfc.
double normal_cdf(double x);

}  // namespace wafomlab
