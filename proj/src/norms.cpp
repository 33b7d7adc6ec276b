#include "dirichlet/norms.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "dirichlet/errors.hpp"
#include "dirichlet/kernels.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/sieve.hpp"

namespace dirichlet {

const char* method_name(NormEstimate::Method m) {
    switch (m) {
    case NormEstimate::Method::Exact: return "exact";
    case NormEstimate::Method::EvenPower: return "even-power";
    case NormEstimate::Method::Quadrature: return "quadrature";
    case NormEstimate::Method::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

NormEstimate norm_h2(const DirichletPolynomial& f) {
    const auto& coef = f.coefficients();
    const double s = kernels::indexed_sum_parallel(
        coef.size(), [&](std::size_t i) { return std::norm(coef[i]); });
    return {std::sqrt(s), NormEstimate::Method::Exact, 0.0, f.size()};
}

namespace {

DirichletPolynomial dirichlet_power(const DirichletPolynomial& f, int k) {
    DirichletPolynomial g = f;
    for (int i = 1; i < k; ++i) g = convolve(g, f);
    return g;
}

void require_even(int p) {
    if (p < 2 || p % 2 != 0)
        throw precondition_error("even-power norm: p must be an even integer >= 2");
}

} // namespace

NormEstimate norm_hp_even(const DirichletPolynomial& f, int p) {
    require_even(p);
    const int k = p / 2;
    const DirichletPolynomial g = dirichlet_power(f, k);
    NormEstimate h2 = norm_h2(g);
    return {std::pow(h2.value, 1.0 / k), NormEstimate::Method::EvenPower, 0.0, g.size()};
}

namespace {

kernels::McSupport build_mc_support(const DirichletPolynomial& f) {
    kernels::McSupport s;
    const auto& idx = f.indices();
    const auto& coef = f.coefficients();
    if (idx.empty()) return s;
    SpfSieve sieve(std::max<std::uint64_t>(idx.back(), 2));
    // prime -> dimension slot, ascending
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n : idx)
        for (const auto& [p, e] : sieve.factorize(n)) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::unordered_map<std::uint64_t, std::uint32_t> slot;
    for (std::size_t j = 0; j < primes.size(); ++j)
        slot[primes[j]] = static_cast<std::uint32_t>(j);
    s.dimensions = primes.size();
    s.coef_re.reserve(idx.size());
    s.coef_im.reserve(idx.size());
    s.fact_off.push_back(0);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        s.coef_re.push_back(coef[i].real());
        s.coef_im.push_back(coef[i].imag());
        for (const auto& [p, e] : sieve.factorize(idx[i])) {
            s.fact_prime.push_back(slot[p]);
            s.fact_exp.push_back(static_cast<std::uint32_t>(e));
        }
        s.fact_off.push_back(static_cast<std::uint32_t>(s.fact_prime.size()));
    }
    return s;
}

} // namespace

NormEstimate norm_hp_mc(const DirichletPolynomial& f, double p,
                        std::uint64_t samples, std::uint64_t seed) {
    if (!(p >= 1.0)) throw precondition_error("norm_hp_mc: p must be >= 1");
    if (samples < 1) throw precondition_error("norm_hp_mc: samples must be >= 1");
    if (f.empty()) return {0.0, NormEstimate::Method::MonteCarlo, 0.0, samples};
    const kernels::McSupport sup = build_mc_support(f);
    const kernels::McMoments m = kernels::mc_abs_power_moments_parallel(sup, p, samples, seed);
    const double mean = m.mean;
    const double var = std::max(0.0, m.second - mean * mean);
    const double se_mean = std::sqrt(var / static_cast<double>(samples));
    const double value = std::pow(mean, 1.0 / p);
    // delta method through x -> x^{1/p}
    const double err = mean > 0.0 ? value / (p * mean) * se_mean : 0.0;
    return {value, NormEstimate::Method::MonteCarlo, err, samples};
}

NormEstimate norm_a2(const DirichletPolynomial& f, const WeightMeasure& mu) {
    const auto& idx = f.indices();
    const auto& coef = f.coefficients();
    if (!idx.empty() && idx.front() == 1 && !mu.finite_total_mass())
        throw precondition_error("norm_a2: measure has infinite mass, first coefficient must be zero");
    double s = 0.0;
    if (mu.has_closed_form_moments()) {
        s = kernels::indexed_sum_parallel(idx.size(), [&](std::size_t i) {
            return std::norm(coef[i]) * moment_weight_closed_form(mu, idx[i]);
        });
        return {std::sqrt(s), NormEstimate::Method::Exact, 0.0, idx.size()};
    }
    double err_sq = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const double w = moment_weight_quadrature(mu, idx[i], 1e-10);
        s += std::norm(coef[i]) * w;
        err_sq += std::norm(coef[i]) * w * 1e-10;
    }
    const double value = std::sqrt(s);
    return {value, NormEstimate::Method::Quadrature,
            value > 0.0 ? err_sq / (2.0 * value) : 0.0, idx.size()};
}

namespace {

// ||f_sigma||_{H^p}^p for even p as a function of sigma, through the fixed
// square/power g = f^{p/2}: value(sigma) = sum |g_n|^2 n^{-2 sigma}
struct EvenTranslateNorm {
    DirichletPolynomial g;
    double operator()(double sigma) const {
        const auto& coef = g.coefficients();
        const auto& logs = g.log_indices();
        return kernels::indexed_sum_parallel(coef.size(), [&](std::size_t i) {
            return std::norm(coef[i]) * std::exp(-2.0 * sigma * logs[i]);
        });
    }
};

double outer_cutoff(const WeightMeasure& mu, const DirichletPolynomial& f) {
    // integrand bounded by (sum |a_n| n^{-sigma})^p * density; everything in
    // the support has n >= 2 or the measure has finite mass, so 2^{-p sigma}
    // or e^{-b sigma} kills the tail well before this
    double c, a, b;
    mu.power_exponential_form(c, a, b);
    const double decay = b + (f.indices().empty() || f.indices().front() > 1 ? 1.0 : 0.0);
    (void)decay;
    return 60.0 + std::max(0.0, a) * 8.0;
}

} // namespace

NormEstimate norm_ap(const DirichletPolynomial& f, const WeightMeasure& mu,
                     double p, const ApOptions& opt) {
    if (!(p >= 1.0)) throw precondition_error("norm_ap: p must be >= 1");
    if (f.constant_coefficient() != Complex(0.0, 0.0) && !mu.finite_total_mass())
        throw precondition_error(
            "norm_ap: infinite-mass weight requires zero first coefficient");
    if (f.empty()) return {0.0, NormEstimate::Method::EvenPower, 0.0, 0};

    if (opt.inner == ApOptions::Inner::Even) {
        const int ip = static_cast<int>(p);
        if (static_cast<double>(ip) != p)
            throw precondition_error("norm_ap(even): p must be an even integer");
        require_even(ip);
        EvenTranslateNorm tn{dirichlet_power(f, ip / 2)};
        if (mu.has_closed_form_moments()) {
            // Tonelli: int sum |g_n|^2 n^{-2u} dmu = sum |g_n|^2 w_n, exact
            const auto& idx = tn.g.indices();
            const auto& coef = tn.g.coefficients();
            const double s = kernels::indexed_sum_parallel(idx.size(), [&](std::size_t i) {
                return std::norm(coef[i]) * moment_weight_closed_form(mu, idx[i]);
            });
            return {std::pow(s, 1.0 / p), NormEstimate::Method::EvenPower, 0.0, idx.size()};
        }
        const double U = outer_cutoff(mu, f);
        const auto integrand = [&](double u) {
            return u <= 0.0 ? 0.0 : tn(u) * mu.density(u);
        };
        QuadResult q = integrate(integrand, 0.0, U, 0.0, opt.rel_tol, 4000);
        const double value = std::pow(q.value, 1.0 / p);
        const double err = q.value > 0.0 ? value / (p * q.value) * q.error : 0.0;
        return {value, NormEstimate::Method::Quadrature, err,
                static_cast<std::uint64_t>(q.evaluations)};
    }

    // Monte Carlo inner path: fixed geometric panels, shared character sample.
    // F = sum_i w_i h(u_i) mean_k X_{ik} = mean_k Y_k with
    // Y_k = sum_i w_i h(u_i) X_{ik}; SE(F) = sd(Y)/sqrt(K).
    const double U = outer_cutoff(mu, f);
    // Gauss-Legendre 8 on geometric panels [0, U]
    static const double gl_x[4] = {0.1834346424956498, 0.5255324099163290,
                                   0.7966664774136267, 0.9602898564975363};
    static const double gl_w[4] = {0.3626837833783620, 0.3137066458778873,
                                   0.2223810344533745, 0.1012285362903763};
    std::vector<double> nodes, weights;
    double lo = 0.0, width = 1.0 / 64.0;
    while (lo < U) {
        const double hi = std::min(U, lo + width);
        const double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
        for (int i = 0; i < 4; ++i) {
            nodes.push_back(c - h * gl_x[i]);
            weights.push_back(h * gl_w[i]);
            nodes.push_back(c + h * gl_x[i]);
            weights.push_back(h * gl_w[i]);
        }
        lo = hi;
        width *= 2.0;
    }
    const kernels::McSupport sup0 = build_mc_support(f);
    const std::size_t nn = nodes.size();
    std::vector<double> node_mean(nn), node_m2(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        // translated coefficients at this node; identical sample seed/stream
        kernels::McSupport s = sup0;
        const auto& logs = f.log_indices();
        for (std::size_t j = 0; j < s.coef_re.size(); ++j) {
            const double damp = std::exp(-nodes[i] * logs[j]);
            s.coef_re[j] *= damp;
            s.coef_im[j] *= damp;
        }
        const kernels::McMoments m =
            kernels::mc_abs_power_moments_parallel(s, p, opt.samples, opt.seed);
        node_mean[i] = m.mean;
        node_m2[i] = m.second;
    }
    double F = 0.0, varF = 0.0;
    for (std::size_t i = 0; i < nn; ++i) {
        const double wh = weights[i] * mu.density(std::max(nodes[i], 1e-300));
        F += wh * node_mean[i];
        const double var_i = std::max(0.0, node_m2[i] - node_mean[i] * node_mean[i]);
        // same sample reused across nodes: conservative perfect-correlation bound
        varF += wh * std::sqrt(var_i / static_cast<double>(opt.samples));
    }
    const double se = varF; // sum of per-node SEs bounds SE of the correlated sum
    const double value = std::pow(F, 1.0 / p);
    const double err = F > 0.0 ? value / (p * F) * se : 0.0;
    return {value, NormEstimate::Method::MonteCarlo, err, opt.samples};
}

} // namespace dirichlet
