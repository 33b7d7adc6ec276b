#pragma once

#include <cstdint>
#include <vector>

namespace dirichlet {

// Certified evaluation of sums sum_{n >= n0} n^{-2 sigma} (1 + log n)^omega
// (2 sigma > 1, omega >= 0): partial sum to N plus the midpoint of the
// integral-test bracket [int_{N+1}^inf, int_N^inf].  The tail integral has
// the closed form
//   int_N^inf x^{-2s}(1+log x)^w dx = e^{2s-1} Gamma(w+1, (2s-1)(1+log N))
//                                      / (2s-1)^{w+1},
// so the enclosure half-width is (int_N - int_{N+1})/2 <= g(N)/2.
struct BracketedSum {
    double value = 0.0;       // partial sum + midpoint correction
    double half_width = 0.0;  // |value - true| <= half_width
    std::uint64_t terms = 0;  // N
};

double log_power_tail_integral(double two_sigma, double omega, std::uint64_t N);

// N is chosen (doubling, cap n_cap) so half_width <= hw_target.
BracketedSum power_log_sum(double two_sigma, double omega, std::uint64_t n0,
                           double hw_target, std::uint64_t n_cap = 100000000ull);

// zeta(s) = power_log_sum with omega = 0, n0 = 1; relative target.
// Slow but enclosure-certified; the independent cross-check for
// zeta_euler_maclaurin.
double zeta_tail_corrected(double s, double rel_tol = 1e-9);

// Euler-Maclaurin zeta for real s > 1: 64 direct terms plus six Bernoulli
// corrections, good to ~1e-15 relative across (1, 50]; the fast path used
// inside the Euler products.
double zeta_euler_maclaurin(double s);

// ---------------------------------------------------------------------------
// Second-moment divisor series
//   Z_m(s) = sum_n d_m(n)^2 n^{-s} = zeta(s)^{m^2} prod_p F_m(p^{-s}),
//   F_m(x) = (1-x)^{m^2} sum_k binom(m+k-1,k)^2 x^k
// (d_m(p^k) = binom(m+k-1,k)); the product over p > P is bounded through
// |log F_m(x)| <= K_m x^2.  This is the H^2 route to the full zeta power:
// ||zeta^m(sigma+.)||_{H^2}^2 = Z_m(2 sigma).
// ---------------------------------------------------------------------------
class DivisorSquareSeries {
public:
    explicit DivisorSquareSeries(int prime_limit = 100000);

    // log F_m(x), 0 <= x < 1
    static double log_euler_factor(int m, double x);

    // log Z_m(s), s > 1; err_bound (optional) receives the absolute bound on
    // the neglected log-tail (prime cutoff + zeta bracket)
    double log_value(int m, double s, double* err_bound = nullptr) const;

    // log of ||zeta^m(sigma + .)||_{A^q_beta}^q
    //       = log int_0^inf h_beta(u) Z_{m q/2}(2 sigma + 2u) du
    // (beta an alpha-density parameter; q even)
    double log_a_norm_q(int m, int q, double beta, double sigma) const;

    int prime_limit() const { return prime_limit_; }

private:
    int prime_limit_;
    std::vector<std::uint32_t> primes_;
};

} // namespace dirichlet
