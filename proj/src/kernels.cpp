#include "dirichlet/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <omp.h>

#include "dirichlet/rng.hpp"

namespace dirichlet::kernels {

namespace {
int g_max_threads = 0; // 0 = library default
}

int max_threads() {
    return g_max_threads > 0 ? g_max_threads : omp_get_max_threads();
}

void set_max_threads(int n) {
    g_max_threads = n;
    if (n > 0) omp_set_num_threads(n);
}

namespace detail {
double chunk_reduce_serial(std::size_t, double* chunk_sums, std::size_t nchunks) {
    double s = 0.0;
    for (std::size_t c = 0; c < nchunks; ++c) s += chunk_sums[c];
    return s;
}
}

void zeta_multiply_serial(const std::vector<double>& f, std::vector<double>& out) {
    const std::size_t n = f.size();
    out.assign(n, 0.0);
    for (std::size_t d = 1; d < n; ++d) {
        const double v = f[d];
        if (v == 0.0) continue;
        for (std::size_t k = d; k < n; k += d) out[k] += v;
    }
}

void zeta_multiply_parallel(const std::vector<double>& f, std::vector<double>& out) {
    const std::size_t n = f.size();
    out.assign(n, 0.0);
    if (n < 2) return;
    const int nt = max_threads();
    // disjoint contiguous output blocks; every thread walks d ascending,
    // so per-index addition order equals the serial variant
    #pragma omp parallel num_threads(nt)
    {
        const int tid = omp_get_thread_num();
        const int T = omp_get_num_threads();
        const std::size_t lo = 1 + (n - 1) * static_cast<std::size_t>(tid) / T;
        const std::size_t hi = 1 + (n - 1) * static_cast<std::size_t>(tid + 1) / T;
        for (std::size_t d = 1; d < hi; ++d) {
            const double v = f[d];
            if (v == 0.0) continue;
            std::size_t k = ((lo + d - 1) / d) * d;
            for (; k < hi; k += d) out[k] += v;
        }
    }
}

namespace {

// |B f(chi)|^p for one sampled character; chi(p_j) = exp(2*pi*i*u_j)
inline double sample_abs_power(const McSupport& s, double p,
                               std::uint64_t seed, std::uint64_t sample,
                               std::vector<std::complex<double>>& chi_buf) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (std::size_t j = 0; j < s.dimensions; ++j) {
        const double u = rng::uniform(seed, sample, j);
        chi_buf[j] = std::polar(1.0, two_pi * u);
    }
    std::complex<double> acc(0.0, 0.0);
    const std::size_t m = s.coef_re.size();
    for (std::size_t i = 0; i < m; ++i) {
        std::complex<double> chi_n(1.0, 0.0);
        for (std::uint32_t f = s.fact_off[i]; f < s.fact_off[i + 1]; ++f) {
            const std::complex<double> cp = chi_buf[s.fact_prime[f]];
            std::complex<double> pw = cp;
            for (std::uint32_t e = 1; e < s.fact_exp[f]; ++e) pw *= cp;
            chi_n *= pw;
        }
        acc += std::complex<double>(s.coef_re[i], s.coef_im[i]) * chi_n;
    }
    const double a = std::abs(acc);
    return p == 2.0 ? a * a : std::pow(a, p);
}

template <bool Parallel>
McMoments mc_moments_impl(const McSupport& s, double p,
                          std::uint64_t samples, std::uint64_t seed) {
    const std::size_t nchunks = (samples + kChunk - 1) / kChunk;
    std::vector<double> sum1(nchunks, 0.0), sum2(nchunks, 0.0);
    #pragma omp parallel for schedule(static) if (Parallel)
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        std::vector<std::complex<double>> chi_buf(s.dimensions);
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + kChunk, samples);
        double s1 = 0.0, s2 = 0.0;
        for (std::uint64_t k = lo; k < hi; ++k) {
            const double x = sample_abs_power(s, p, seed, k, chi_buf);
            s1 += x;
            s2 += x * x;
        }
        sum1[static_cast<std::size_t>(c)] = s1;
        sum2[static_cast<std::size_t>(c)] = s2;
    }
    double t1 = 0.0, t2 = 0.0;
    for (std::size_t c = 0; c < nchunks; ++c) { t1 += sum1[c]; t2 += sum2[c]; }
    McMoments m;
    m.mean = t1 / static_cast<double>(samples);
    m.second = t2 / static_cast<double>(samples);
    m.samples = samples;
    return m;
}

} // namespace

McMoments mc_abs_power_moments_serial(const McSupport& s, double p,
                                      std::uint64_t samples, std::uint64_t seed) {
    return mc_moments_impl<false>(s, p, samples, seed);
}

McMoments mc_abs_power_moments_parallel(const McSupport& s, double p,
                                        std::uint64_t samples, std::uint64_t seed) {
    return mc_moments_impl<true>(s, p, samples, seed);
}

} // namespace dirichlet::kernels
