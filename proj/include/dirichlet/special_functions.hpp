#pragma once

namespace dirichlet {

// regularized upper incomplete gamma Q(a, x) = Gamma(a, x)/Gamma(a), a > 0, x >= 0
double gamma_q(double a, double x);

// unnormalized upper incomplete gamma Gamma(a, x)
double upper_incomplete_gamma(double a, double x);

} // namespace dirichlet
