#include <doctest.h>

#include <cmath>
#include <complex>

#include "dirichlet/errors.hpp"
#include "dirichlet/norms.hpp"
#include "dirichlet/polynomial.hpp"
#include "dirichlet/rng.hpp"

using namespace dirichlet;

namespace {

DirichletPolynomial two_three() {
    return DirichletPolynomial::monomial(2, {1.0, 0.0}) +
           DirichletPolynomial::monomial(3, {1.0, 0.0});
}

DirichletPolynomial random_poly(std::uint64_t seed, std::uint64_t trial, bool zero_first) {
    std::vector<std::pair<std::uint64_t, Complex>> terms;
    const int k = 2 + static_cast<int>(rng::bits(seed, trial, 0) % 8);
    for (int j = 0; j < k; ++j) {
        const std::uint64_t lo = zero_first ? 2 : 1;
        const std::uint64_t n = lo + rng::bits(seed, trial, 3 * j + 1) % 40;
        terms.emplace_back(n, Complex(2.0 * rng::uniform(seed, trial, 3 * j + 2) - 1.0,
                                      2.0 * rng::uniform(seed, trial, 3 * j + 3) - 1.0));
    }
    auto f = DirichletPolynomial::from_terms(std::move(terms));
    return f.empty() ? DirichletPolynomial::monomial(2, {1.0, 0.0}) : f;
}

} // namespace

TEST_CASE("H^2 norm basics") {
    CHECK(norm_h2(two_three()).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(norm_h2(DirichletPolynomial::monomial(17, {0.0, 1.0})).value == doctest::Approx(1.0));

    // translate(zeta_N, 1): squared norm is the partial sum of n^{-2}
    const std::uint64_t N = 20000;
    const auto z = zeta_truncation(N).translate(1.0);
    double partial = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) partial += 1.0 / (static_cast<double>(n) * n);
    const double v = norm_h2(z).value;
    CHECK(v * v == doctest::Approx(partial).epsilon(1e-12));
    CHECK(M_PI * M_PI / 6.0 - v * v < 1.0 / static_cast<double>(N)); // integral tail bound
}

TEST_CASE("even H^p norms via Dirichlet powers") {
    const auto f = two_three();
    CHECK(norm_hp_even(f, 2).value == doctest::Approx(norm_h2(f).value).epsilon(1e-14));
    // ||f||_{H^4} = ||f^2||_{H^2}^{1/2} = (1+4+1)^{1/4}
    CHECK(norm_hp_even(f, 4).value == doctest::Approx(std::pow(6.0, 0.25)).epsilon(1e-13));
    CHECK(norm_hp_even(f, 4).value == doctest::Approx(1.56508).epsilon(1e-5));
    CHECK_THROWS_AS(norm_hp_even(f, 3), precondition_error);

    // brute-force oracle at small truncation: ||f||_{H^4}^4 = sum_k |(f^2)_k|^2
    const auto z = zeta_power(2, 6);
    double acc = 0.0;
    for (std::uint64_t k = 1; k <= 36; ++k) {
        Complex c(0.0, 0.0);
        for (std::uint64_t d = 1; d <= k; ++d)
            if (k % d == 0) c += z.coefficient(d) * z.coefficient(k / d);
        acc += std::norm(c);
    }
    CHECK(std::pow(norm_hp_even(z, 4).value, 4.0) == doctest::Approx(acc).epsilon(1e-12));
}

TEST_CASE("Monte Carlo H^p agrees with the even-power oracle") {
    const auto f = two_three();
    const auto mono = DirichletPolynomial::monomial(5, {0.0, 1.0});

    const NormEstimate m4 = norm_hp_mc(f, 4.0, 100000, 11);
    CHECK(std::fabs(m4.value - std::pow(6.0, 0.25)) <= 4.0 * m4.error);

    const NormEstimate m2 = norm_hp_mc(f, 2.0, 100000, 12);
    CHECK(std::fabs(m2.value - std::sqrt(2.0)) <= 4.0 * m2.error);

    const NormEstimate mm = norm_hp_mc(mono, 3.0, 1000, 13);
    CHECK(mm.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mm.error == doctest::Approx(0.0));

    const NormEstimate r1 = norm_hp_mc(f, 4.0, 20000, 99);
    const NormEstimate r2 = norm_hp_mc(f, 4.0, 20000, 99);
    REQUIRE(r1.value == r2.value); // bit-identical under the same seed
}

TEST_CASE("A^2 norms through diagonal moments") {
    const auto mu0 = WeightMeasure::alpha_density(0.0);
    CHECK(norm_a2(DirichletPolynomial::monomial(1, {1.0, 0.0}),
                  WeightMeasure::alpha_density(1.3)).value == doctest::Approx(1.0));
    CHECK(norm_a2(DirichletPolynomial::monomial(2, {1.0, 0.0}), mu0).value ==
          doctest::Approx(1.0 / std::sqrt(1.0 + std::log(2.0))).epsilon(1e-12));
    CHECK(norm_a2(DirichletPolynomial::monomial(2, {1.0, 0.0}), mu0).value ==
          doctest::Approx(0.768515).epsilon(1e-6));
    const double w2 = 1.0 / (1.0 + std::log(2.0)), w3 = 1.0 / (1.0 + std::log(3.0));
    CHECK(norm_a2(two_three(), mu0).value ==
          doctest::Approx(std::sqrt(w2 + w3)).epsilon(1e-12));
}

TEST_CASE("A^p norm: p=2 agreement between moment route and quadrature route") {
    const auto f = random_poly(31, 0, true);
    // tilde(power(0), p=2, t=0.5) is the measure u^1 du = power(1); the tilde
    // spelling forces the outer-quadrature path, power(1) takes moments
    const auto tilde = WeightMeasure::tilde(WeightMeasure::power(0.0), 2.0, 0.5);
    const auto p1 = WeightMeasure::power(1.0);
    const double a = norm_ap(f, tilde, 2.0).value;
    const double b = norm_ap(f, p1, 2.0).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-6));
    CHECK(norm_ap(f, p1, 2.0).value == doctest::Approx(norm_a2(f, p1).value).epsilon(1e-10));

    // and against a direct midpoint-rule oracle of int ||f_u||^2 u du
    double riemann = 0.0;
    const int K = 200000;
    const double U = 50.0;
    for (int i = 0; i < K; ++i) {
        const double u = (i + 0.5) * U / K;
        const double h2 = norm_h2(f.translate(u)).value;
        riemann += h2 * h2 * u * U / K;
    }
    CHECK(a == doctest::Approx(std::sqrt(riemann)).epsilon(1e-4));
}

TEST_CASE("A^p norm of a single monomial at p=4") {
    // ||2^{-s}||_{A^4_0}^4 = int 2^{-4u} h_0(u) du = 1/(1+2 log 2)
    const auto mu0 = WeightMeasure::alpha_density(0.0);
    const auto f = DirichletPolynomial::monomial(2, {1.0, 0.0});
    CHECK(norm_ap(f, mu0, 4.0).value ==
          doctest::Approx(std::pow(1.0 / (1.0 + 2.0 * std::log(2.0)), 0.25)).epsilon(1e-10));
}

TEST_CASE("power-weight A^2 norms need zero first coefficient") {
    const auto pw = WeightMeasure::power(0.5);
    const auto f = random_poly(37, 1, true);
    double expect = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double L = std::log(static_cast<double>(f.indices()[i]));
        expect += std::norm(f.coefficients()[i]) * std::tgamma(1.5) / std::pow(2.0 * L, 1.5);
    }
    CHECK(norm_ap(f, pw, 2.0).value == doctest::Approx(std::sqrt(expect)).epsilon(1e-9));

    const auto bad = DirichletPolynomial::monomial(1, {1.0, 0.0}) + f;
    CHECK_THROWS_AS(norm_ap(bad, pw, 2.0), precondition_error);
    CHECK_THROWS_AS(norm_a2(bad, pw), precondition_error);
}

TEST_CASE("A^p contracts against H^p for probability measures") {
    const auto mu = WeightMeasure::alpha_density(0.8);
    for (std::uint64_t trial = 0; trial < 8; ++trial) {
        const auto f = random_poly(41, trial, false);
        for (int p : {2, 4}) {
            const double ap = norm_ap(f, mu, p).value;
            const double hp = norm_hp_even(f, p).value;
            CHECK(ap <= hp * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("translation damps the H^2 norm monotonically") {
    const auto f = random_poly(43, 0, false);
    double prev = norm_h2(f).value;
    for (double sigma : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double v = norm_h2(f.translate(sigma)).value;
        CHECK(v <= prev * (1.0 + 1e-12));
        prev = v;
    }
}

TEST_CASE("norm axioms hold within error bounds") {
    const auto mu = WeightMeasure::alpha_density(0.2);
    for (std::uint64_t trial = 0; trial < 6; ++trial) {
        const auto f = random_poly(47, 2 * trial, false);
        const auto g = random_poly(47, 2 * trial + 1, false);
        const Complex lambda(1.7, -0.4);
        // absolute homogeneity
        CHECK(norm_h2(lambda * f).value ==
              doctest::Approx(std::abs(lambda) * norm_h2(f).value).epsilon(1e-12));
        CHECK(norm_ap(lambda * f, mu, 4.0).value ==
              doctest::Approx(std::abs(lambda) * norm_ap(f, mu, 4.0).value).epsilon(1e-9));
        // triangle inequality
        CHECK(norm_h2(f + g).value <= norm_h2(f).value + norm_h2(g).value + 1e-12);
        CHECK(norm_hp_even(f + g, 4).value <=
              norm_hp_even(f, 4).value + norm_hp_even(g, 4).value + 1e-9);
        CHECK(norm_ap(f + g, mu, 2.0).value <=
              norm_ap(f, mu, 2.0).value + norm_ap(g, mu, 2.0).value + 1e-9);
    }
}

TEST_CASE("constant coefficient is dominated by the A^p norm") {
    const auto mu = WeightMeasure::alpha_density(0.5);
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        const auto f = random_poly(53, trial, false);
        const double a1 = std::abs(f.constant_coefficient());
        for (int p : {2, 4})
            CHECK(a1 <= norm_ap(f, mu, p).value * (1.0 + 1e-9));
    }
}
