#pragma once

#include "dirichlet/polynomial.hpp"

namespace dirichlet {

// Fractional integration semigroup acting on Dirichlet polynomials with
// zero first coefficient:
//
//   I_t(f)(s) = 1/Gamma(t) int_0^inf x^{t-1} f(x+s) dx
//             = sum_{n>=2} a_n / (log n)^t n^{-s}
//
// The family is an additive semigroup in t; integer t inverts the
// derivative up to sign: I_m((-1)^m f^{(m)}) = f.
// t is kept in (0, 64] so Gamma(t) and (log n)^t stay in double range.

// coefficient action a_n -> a_n / (log n)^t
DirichletPolynomial rl_apply(const DirichletPolynomial& f, double t);

// the defining integral evaluated numerically at one point (cross-check of
// the coefficient route); Re s > 0 required; the x = 0 endpoint singularity
// for t < 1 is removed by the substitution x = y^{1/t}
Complex rl_apply_quadrature(const DirichletPolynomial& f, double t, Complex s,
                            double rel_tol = 1e-9);

// k_t = int_-inf^inf e^{1-iy} (1-iy)^{-(t+1)} dy, expected 2 pi / Gamma(t+1).
// Truncated oscillatory quadrature plus two integration-by-parts boundary
// terms at the cut; rel_tol is checked against the closed form and a
// tolerance_error is raised when the truncation cannot reach it.
struct KtResult {
    double value = 0.0;
    double reference = 0.0;      // 2 pi / Gamma(t+1)
    double achieved_rel_error = 0.0;
    double truncation = 0.0;     // half-range T used
    bool ok = false;
};
KtResult kt_constant(double t, double rel_tol);

// fractional Cauchy reconstruction
//   f(theta) = 1/k_t int_-inf^inf I_t(f)(i tau) (theta - i tau)^{-(t+1)} dtau
// evaluated by windowed quadrature with the decay-based truncation
//   sum |a_n| (log n)^{-t} * 2 T^{-t}/t < tol/2.
Complex reconstruct(const DirichletPolynomial& f, double t, double theta, double tol);

} // namespace dirichlet
