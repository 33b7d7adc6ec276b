#include "dirichlet/divisor_series.hpp"

#include <cmath>

#include "dirichlet/errors.hpp"
#include "dirichlet/kernels.hpp"
#include "dirichlet/sieve.hpp"
#include "dirichlet/special_functions.hpp"

namespace dirichlet {

double log_power_tail_integral(double two_sigma, double omega, std::uint64_t N) {
    const double d = two_sigma - 1.0;
    const double x = d * (1.0 + std::log(static_cast<double>(N)));
    // e^d Gamma(w+1, x) / d^{w+1}
    return d + std::log(gamma_q(omega + 1.0, x)) + std::lgamma(omega + 1.0) -
           (omega + 1.0) * std::log(d);
}

namespace {

double summand(double two_sigma, double omega, double n) {
    const double l = std::log(n);
    return std::exp(-two_sigma * l + omega * std::log1p(l));
}

} // namespace

BracketedSum power_log_sum(double two_sigma, double omega, std::uint64_t n0,
                           double hw_target, std::uint64_t n_cap) {
    if (!(two_sigma > 1.0)) throw precondition_error("power_log_sum: need 2*sigma > 1");
    if (omega < 0.0) throw precondition_error("power_log_sum: need omega >= 0");
    if (n0 < 1) throw precondition_error("power_log_sum: need n0 >= 1");

    // the summand decreases for x > exp(omega/(2 sigma) - 1); the bracket is
    // valid once N is past that point
    const double decreasing_from = std::exp(omega / two_sigma - 1.0);
    std::uint64_t N = 4096;
    while (static_cast<double>(N) < decreasing_from) N *= 2;
    if (N < n0 * 2) N = n0 * 2;

    const auto half_width = [&](std::uint64_t nn) {
        return 0.5 * summand(two_sigma, omega, static_cast<double>(nn));
    };
    if (hw_target > 0.0) {
        while (half_width(N) > hw_target && N < n_cap) N *= 2;
        if (N > n_cap) N = n_cap;
        if (half_width(N) > hw_target)
            throw tolerance_error("power_log_sum: bracket half-width " +
                                  std::to_string(half_width(N)) + " above target " +
                                  std::to_string(hw_target) + " at the N cap " +
                                  std::to_string(n_cap));
    } else {
        N = n_cap; // caller settles for whatever the cap delivers
    }

    const double partial = kernels::indexed_sum_parallel(N - n0 + 1, [&](std::size_t i) {
        return summand(two_sigma, omega, static_cast<double>(n0 + i));
    });
    const double t_hi = std::exp(log_power_tail_integral(two_sigma, omega, N));
    const double t_lo = std::exp(log_power_tail_integral(two_sigma, omega, N + 1));
    BracketedSum out;
    out.value = partial + 0.5 * (t_hi + t_lo);
    out.half_width = 0.5 * (t_hi - t_lo);
    out.terms = N;
    return out;
}

double zeta_tail_corrected(double s, double rel_tol) {
    if (!(s > 1.0)) throw precondition_error("zeta_tail_corrected: need s > 1");
    if (s > 50.0) // 1 + 2^{-s} + 3^{-s} already exhausts double precision
        return 1.0 + std::exp2(-s) + std::exp(-s * std::log(3.0));
    // zeta(s) >= max(1, 1/(s-1)) sets the value scale for the target
    const double scale = std::max(1.0, 1.0 / (s - 1.0));
    BracketedSum b = power_log_sum(s, 0.0, 1, rel_tol * scale);
    return b.value;
}

double zeta_euler_maclaurin(double s) {
    if (!(s > 1.0)) throw precondition_error("zeta_euler_maclaurin: need s > 1");
    if (s > 50.0) return 1.0 + std::exp2(-s) + std::exp(-s * std::log(3.0));
    constexpr int N = 64;
    // B_{2k}/(2k)! for k = 1..6
    constexpr double bern[6] = {1.0 / 12.0,       -1.0 / 720.0,
                                1.0 / 30240.0,    -1.0 / 1209600.0,
                                1.0 / 47900160.0, -5.284190138687493e-10};
    double sum = 0.0;
    for (int n = 1; n <= N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double Ns = std::exp(-s * std::log(static_cast<double>(N)));
    sum += static_cast<double>(N) * Ns / (s - 1.0); // N^{1-s}/(s-1)
    sum -= 0.5 * Ns;
    // correction terms B_{2k}/(2k)! * (s)_{2k-1} * N^{-s-2k+1}
    double rising = s;      // s(s+1)...(s+2k-2)
    double npow = Ns / N;   // N^{-s-2k+1}
    for (int k = 1; k <= 6; ++k) {
        sum += bern[k - 1] * rising * npow;
        rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        npow /= static_cast<double>(N) * N;
    }
    return sum;
}

DivisorSquareSeries::DivisorSquareSeries(int prime_limit)
    : prime_limit_(prime_limit),
      primes_(primes_up_to(static_cast<std::uint32_t>(prime_limit))) {}

double DivisorSquareSeries::log_euler_factor(int m, double x) {
    if (m < 1) throw precondition_error("log_euler_factor: need m >= 1");
    if (!(x >= 0.0) || x >= 1.0) throw precondition_error("log_euler_factor: need 0 <= x < 1");
    if (x == 0.0) return 0.0;
    // sum binom(m+k-1, k)^2 x^k by the ratio recurrence
    double sum = 1.0, binom = 1.0, xk = 1.0;
    for (int k = 1; k < 4000; ++k) {
        binom *= static_cast<double>(m + k - 1) / static_cast<double>(k);
        xk *= x;
        const double term = binom * binom * xk;
        sum += term;
        if (term < sum * 1e-18 && k > m) break;
    }
    return m * static_cast<double>(m) * std::log1p(-x) + std::log(sum);
}

double DivisorSquareSeries::log_value(int m, double s, double* err_bound) const {
    if (!(s > 1.0)) throw precondition_error("DivisorSquareSeries: need s > 1");
    const double zeta_rel = 1e-14;
    double v = static_cast<double>(m) * m * std::log(zeta_euler_maclaurin(s));
    for (std::uint32_t p : primes_) {
        const double x = std::exp(-s * std::log(static_cast<double>(p)));
        if (x < 1e-18) break;
        v += log_euler_factor(m, x);
    }
    if (err_bound) {
        // |log F_m(x)| <= K_m x^2 with K_m read off at a reference point;
        // sum over primes > P bounded by the integral over reals > P
        const double x_ref = 0.01;
        const double K = 2.0 * std::fabs(log_euler_factor(m, x_ref)) / (x_ref * x_ref) + 1.0;
        const double P = static_cast<double>(prime_limit_);
        const double prime_tail = K * std::pow(P, 1.0 - 2.0 * s) / (2.0 * s - 1.0);
        *err_bound = prime_tail + static_cast<double>(m) * m * zeta_rel;
    }
    return v;
}

double DivisorSquareSeries::log_a_norm_q(int m, int q, double beta, double sigma) const {
    if (q < 2 || q % 2 != 0) throw precondition_error("log_a_norm_q: q must be even");
    if (!(sigma > 0.5)) throw precondition_error("log_a_norm_q: need sigma > 1/2");
    const int k = m * q / 2;
    const double z0 = log_value(k, 2.0 * sigma);
    // h_beta(u) Z_k(2 sigma + 2u), integrated on geometric panels starting at
    // the scale of (2 sigma - 1) where the integrand turns over
    const double log_c = (beta + 1.0) * std::log(2.0) - std::lgamma(beta + 1.0);
    const auto integrand = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double lz = log_value(k, 2.0 * sigma + 2.0 * u);
        return std::exp(log_c + beta * std::log(u) - 2.0 * u + lz - z0);
    };
    // 15-point Gauss-Legendre per panel is ample for this smooth integrand
    static const double gx[8] = {0.0950125098376374, 0.2816035507792589,
                                 0.4580167776572274, 0.6178762444026438,
                                 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double gw[8] = {0.1894506104550685, 0.1826034150449236,
                                 0.1691565193950025, 0.1495959888165767,
                                 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    double total = 0.0;
    double lo = 0.0;
    double width = std::max(0.5 * (2.0 * sigma - 1.0), 1e-4);
    const double U = 40.0 + 8.0 * std::max(0.0, beta);
    while (lo < U) {
        const double hi = std::min(U, lo + width);
        const double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
        double panel = 0.0;
        for (int i = 0; i < 8; ++i)
            panel += gw[i] * (integrand(c - h * gx[i]) + integrand(c + h * gx[i]));
        total += panel * h;
        lo = hi;
        width *= 2.0;
    }
    return std::log(total) + z0;
}

} // namespace dirichlet
