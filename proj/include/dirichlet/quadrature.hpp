#pragma once

#include <complex>
#include <functional>

namespace dirichlet {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;        // estimated absolute error
    long evaluations = 0;
    bool converged = false;
};

struct QuadResultC {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (15-point) bisection on [a, b].  Stops when the
// summed interval error estimate drops below max(abs_tol, rel_tol*|value|)
// or the interval budget runs out (converged = false then).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_intervals = 4000);

QuadResultC integrate(const std::function<std::complex<double>(double)>& f,
                      double a, double b, double abs_tol, double rel_tol,
                      int max_intervals = 4000);

// Long oscillatory ranges: [a, b] is cut into windows of length <= window,
// each integrated adaptively to the per-window share of abs_tol, partial
// results compensated-summed in order.
QuadResultC integrate_windowed(const std::function<std::complex<double>(double)>& f,
                               double a, double b, double window, double abs_tol);

} // namespace dirichlet
