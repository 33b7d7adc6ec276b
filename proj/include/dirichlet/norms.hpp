#pragma once

#include <cstdint>

#include "dirichlet/measures.hpp"
#include "dirichlet/polynomial.hpp"

namespace dirichlet {

struct NormEstimate {
    enum class Method { Exact, EvenPower, Quadrature, MonteCarlo };
    double value = 0.0;
    Method method = Method::Exact;
    double error = 0.0;                 // 0 exact; quadrature tol; MC std error
    std::uint64_t samples_or_nodes = 0;
};

const char* method_name(NormEstimate::Method m);

// H^2 norm: (sum |a_n|^2)^{1/2}, exact
NormEstimate norm_h2(const DirichletPolynomial& f);

// H^p for even p = 2k: |Bf|^{2k} = |B(f^k)|^2, so the norm is
// ||f^k||_{H^2}^{1/k}, exact via k-fold Dirichlet multiplication
NormEstimate norm_hp_even(const DirichletPolynomial& f, int p);

// Monte Carlo H^p over Haar characters, any p >= 1; deterministic per seed,
// error = delta-method propagated standard error of the sample mean
NormEstimate norm_hp_mc(const DirichletPolynomial& f, double p,
                        std::uint64_t samples, std::uint64_t seed);

// A^2_mu via diagonal moments: (sum |a_n|^2 w_n)^{1/2}
NormEstimate norm_a2(const DirichletPolynomial& f, const WeightMeasure& mu);

struct ApOptions {
    enum class Inner { Even, MonteCarlo };
    Inner inner = Inner::Even;
    std::uint64_t samples = 20000;   // Monte Carlo inner path
    std::uint64_t seed = 1;
    double rel_tol = 1e-8;           // outer quadrature tolerance
};

// A^p_mu norm (int_0^inf ||f_sigma||_{H^p}^p dmu(sigma))^{1/p}.
// inner Even: exact ||f_sigma||^p via g = f^{p/2}; measures with closed-form
//   moments then reduce exactly to sum |g_n|^2 w_n, otherwise the outer
//   integral runs by adaptive quadrature.
// inner MonteCarlo: fixed outer panels, one shared character sample across
//   nodes, variance propagated through the outer weights.
// Power-type weights require a zero first coefficient (the n = 1 moment
// diverges).
NormEstimate norm_ap(const DirichletPolynomial& f, const WeightMeasure& mu,
                     double p, const ApOptions& opt = {});

} // namespace dirichlet
