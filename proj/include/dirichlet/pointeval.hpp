#pragma once

#include <cstdint>

#include "dirichlet/polynomial.hpp"

namespace dirichlet {

// Point-evaluation functional norms.  For p = 2 these are reproducing-kernel
// diagonals of weighted ell^2 spaces:
//   ||delta_sigma||^2 = sum_{n >= n0} n^{-2 sigma} / w_n,
// with 1/w_n = (1 + log n)^{alpha+1} for the alpha-density and n0 = 1 (full
// space) or 2 (zero-first-coefficient subspace).  Values carry a rigorous
// integral-test enclosure of the infinite sum (see divisor_series.hpp).
struct KernelValue {
    enum class Space { A2Alpha, A2AlphaInfty, H2 };
    double value = 0.0;
    std::uint64_t truncation_N = 0;
    double tail_bound = 0.0;       // |value - true| <= tail_bound
    Space space = Space::A2Alpha;
};

const char* space_name(KernelValue::Space s);

// tol bounds |value - true norm|; N grows (cap 1e8) until the enclosure is
// that tight, else a tolerance_error reports the achieved bound.
KernelValue delta_norm_a2(double sigma, double alpha, bool subspace, double tol);

// H^2 evaluation norm zeta(2 sigma)^{1/2} by the same bracketed sums.
// (For general p the H^p oracle used elsewhere is zeta(2 sigma)^{1/p}; the
// exponent differs from the verbatim source statement, which omits 1/p.)
KernelValue delta_norm_h2(double sigma, double tol);

// Certified lower bounds for ||delta_sigma||_{(A^p_alpha)^*}, p even, by
// maximizing |f(sigma)| / ||f||_{A^p_alpha} over a test-function family.
struct TestFamily {
    enum class Kind { SingleMonomial, TranslatedZetaPower, Constant };
    Kind kind = Kind::TranslatedZetaPower;
    int max_m = 3;              // zeta powers up to m
    std::uint64_t N = 4000;     // truncation for the zeta-power family
    int epsilon_count = 8;      // translations around sigma - 1/2
};

double delta_lower_bound(double sigma, double alpha, int p, const TestFamily& family);

} // namespace dirichlet
