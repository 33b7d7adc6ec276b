// Serial vs OpenMP throughput for the three data-parallel kernels.
// The variants are bit-identical by construction (same chunked accumulation
// order); this target only reports timings.

#include <cmath>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "dirichlet/kernels.hpp"

using namespace dirichlet;

namespace {

template <class F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = omp_get_wtime();
        fn();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const char* name, double serial_s, double parallel_s) {
    std::printf("%-28s serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n", name,
                serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s);
}

} // namespace

int main() {
    std::printf("threads: %d\n", kernels::max_threads());

    { // divisor-sum multiply at N = 1e7
        const std::size_t N = 10000000;
        std::vector<double> f(N + 1, 1.0), out;
        f[0] = 0.0;
        volatile double sink = 0.0;
        const double ts = time_best_of(3, [&] {
            kernels::zeta_multiply_serial(f, out);
            sink = out[N];
        });
        const double tp = time_best_of(3, [&] {
            kernels::zeta_multiply_parallel(f, out);
            sink = out[N];
        });
        report("zeta_multiply (N=1e7)", ts, tp);
    }

    { // weighted power sum at N = 2e7
        const std::size_t N = 20000000;
        const double sigma = 0.6;
        volatile double sink = 0.0;
        const auto term = [&](std::size_t i) {
            const double n = static_cast<double>(i + 1);
            return std::exp(-2.0 * sigma * std::log(n));
        };
        const double ts = time_best_of(3, [&] { sink = kernels::indexed_sum_serial(N, term); });
        const double tp = time_best_of(3, [&] { sink = kernels::indexed_sum_parallel(N, term); });
        report("power sum (N=2e7)", ts, tp);
    }

    { // Monte Carlo character moments
        kernels::McSupport s;
        // support {2,3,5,6,10,15,30} with unit coefficients
        const std::uint32_t fact[][3] = {{0, 1, 0}, {1, 1, 0}, {2, 1, 0}};
        (void)fact;
        auto push = [&](std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> fs) {
            s.coef_re.push_back(1.0);
            s.coef_im.push_back(0.0);
            for (auto [pi, e] : fs) {
                s.fact_prime.push_back(pi);
                s.fact_exp.push_back(e);
            }
            s.fact_off.push_back(static_cast<std::uint32_t>(s.fact_prime.size()));
        };
        s.fact_off.push_back(0);
        push({{0, 1}});
        push({{1, 1}});
        push({{2, 1}});
        push({{0, 1}, {1, 1}});
        push({{0, 1}, {2, 1}});
        push({{1, 1}, {2, 1}});
        push({{0, 1}, {1, 1}, {2, 1}});
        s.dimensions = 3;
        volatile double sink = 0.0;
        const std::uint64_t K = 400000;
        const double ts = time_best_of(3, [&] {
            sink = kernels::mc_abs_power_moments_serial(s, 4.0, K, 42).mean;
        });
        const double tp = time_best_of(3, [&] {
            sink = kernels::mc_abs_power_moments_parallel(s, 4.0, K, 42).mean;
        });
        report("mc moments (K=4e5, p=4)", ts, tp);
    }
    return 0;
}
