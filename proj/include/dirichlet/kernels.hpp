#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Data-parallel inner loops, each in a serial and an OpenMP variant.
// Both variants accumulate in the same fixed chunk order, so they produce
// bit-identical results; the serial versions are the reference
// implementations used by the tests, and tools/bench_kernels.cpp compares
// their throughput.

namespace dirichlet::kernels {

int max_threads();
void set_max_threads(int n);

inline constexpr std::size_t kChunk = 1 << 14;

namespace detail {
double chunk_reduce_serial(std::size_t n, double* chunk_sums, std::size_t nchunks);
}

// sum_{i=0}^{n-1} term(i), accumulated per fixed-size chunk, chunk partials
// combined in index order.
template <class F>
double indexed_sum_serial(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks, 0.0);
    for (std::size_t c = 0; c < nchunks; ++c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    }
    return detail::chunk_reduce_serial(n, partial.data(), nchunks);
}

template <class F>
double indexed_sum_parallel(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks, 0.0);
    #pragma omp parallel for schedule(static)
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[static_cast<std::size_t>(c)] = s;
    }
    return detail::chunk_reduce_serial(n, partial.data(), nchunks);
}

// out[n] = sum_{d | n} f[d] for 1 <= n < f.size() (dense truncated
// multiplication by the zeta polynomial).  The parallel variant partitions
// the output range into disjoint blocks, so writes never conflict and the
// per-n addition order (d ascending) matches the serial loop exactly.
void zeta_multiply_serial(const std::vector<double>& f, std::vector<double>& out);
void zeta_multiply_parallel(const std::vector<double>& f, std::vector<double>& out);

// mean and uncentered second moment of |B f(chi)|^p over `samples` Haar
// characters; support described by flattened prime factorizations.
// term layout: for support entry i, factors fact[fact_off[i]..fact_off[i+1])
// hold (prime_index, exponent) pairs.
struct McSupport {
    std::vector<double> coef_re, coef_im;
    std::vector<std::uint32_t> fact_off;     // size support+1
    std::vector<std::uint32_t> fact_prime;   // prime index into the sampled dimension
    std::vector<std::uint32_t> fact_exp;
    std::size_t dimensions = 0;              // number of distinct primes
};

struct McMoments {
    double mean = 0.0;
    double second = 0.0;   // mean of squares
    std::uint64_t samples = 0;
};

McMoments mc_abs_power_moments_serial(const McSupport& s, double p,
                                      std::uint64_t samples, std::uint64_t seed);
McMoments mc_abs_power_moments_parallel(const McSupport& s, double p,
                                        std::uint64_t samples, std::uint64_t seed);

} // namespace dirichlet::kernels
