#include <doctest.h>

#include <cmath>
#include <vector>

#include "dirichlet/kernels.hpp"
#include "dirichlet/rng.hpp"

using namespace dirichlet;

TEST_CASE("zeta_multiply: parallel is bit-identical to the serial reference") {
    std::vector<double> f(100001);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = rng::uniform(3, 0, i) - 0.5;
    f[0] = 0.0;
    std::vector<double> a, b;
    kernels::zeta_multiply_serial(f, a);
    kernels::zeta_multiply_parallel(f, b);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] == b[i]);
}

TEST_CASE("zeta_multiply of all-ones gives divisor counts") {
    std::vector<double> ones(201, 1.0);
    ones[0] = 0.0;
    std::vector<double> out;
    kernels::zeta_multiply_serial(ones, out);
    const auto divisors = [](std::size_t n) {
        double c = 0;
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) ++c;
        return c;
    };
    for (std::size_t n = 1; n <= 200; ++n) CHECK(out[n] == divisors(n));
}

TEST_CASE("indexed_sum: serial and parallel agree bitwise and match a plain loop") {
    const std::size_t n = 1000000;
    const auto term = [](std::size_t i) {
        return std::sin(static_cast<double>(i) * 1e-3) / (1.0 + static_cast<double>(i));
    };
    const double a = kernels::indexed_sum_serial(n, term);
    const double b = kernels::indexed_sum_parallel(n, term);
    REQUIRE(a == b);
    double plain = 0.0;
    for (std::size_t i = 0; i < n; ++i) plain += term(i);
    CHECK(a == doctest::Approx(plain).epsilon(1e-12));
}

TEST_CASE("mc moments: serial/parallel identity and seed determinism") {
    kernels::McSupport s;
    s.fact_off = {0, 1, 2};
    s.fact_prime = {0, 1};
    s.fact_exp = {1, 1};
    s.coef_re = {1.0, -0.5};
    s.coef_im = {0.0, 0.25};
    s.dimensions = 2;
    const auto a = kernels::mc_abs_power_moments_serial(s, 3.0, 50000, 99);
    const auto b = kernels::mc_abs_power_moments_parallel(s, 3.0, 50000, 99);
    REQUIRE(a.mean == b.mean);
    REQUIRE(a.second == b.second);
    const auto c = kernels::mc_abs_power_moments_parallel(s, 3.0, 50000, 99);
    REQUIRE(b.mean == c.mean);
    const auto d = kernels::mc_abs_power_moments_parallel(s, 3.0, 50000, 100);
    CHECK(b.mean != d.mean);
}
