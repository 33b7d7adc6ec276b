#include <doctest.h>

#include <cmath>
#include <complex>

#include "dirichlet/character.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/polynomial.hpp"
#include "dirichlet/riemann_liouville.hpp"
#include "dirichlet/rng.hpp"

using namespace dirichlet;

namespace {

DirichletPolynomial random_zero_first(std::uint64_t seed, std::uint64_t trial) {
    std::vector<std::pair<std::uint64_t, Complex>> terms;
    const int k = 2 + static_cast<int>(rng::bits(seed, trial, 0) % 6);
    for (int j = 0; j < k; ++j)
        terms.emplace_back(2 + rng::bits(seed, trial, 3 * j + 1) % 30,
                           Complex(2.0 * rng::uniform(seed, trial, 3 * j + 2) - 1.0,
                                   2.0 * rng::uniform(seed, trial, 3 * j + 3) - 1.0));
    auto f = DirichletPolynomial::from_terms(std::move(terms));
    return f.empty() ? DirichletPolynomial::monomial(2, {1.0, 0.0}) : f;
}

} // namespace

TEST_CASE("coefficient action divides by (log n)^t") {
    const auto e2 = DirichletPolynomial::monomial(2, {1.0, 0.0});
    const auto g = rl_apply(e2, 1.0);
    CHECK(g.coefficient(2).real() == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-14));
    CHECK(g.coefficient(2).real() == doctest::Approx(1.442695).epsilon(1e-6));

    CHECK(rl_apply(DirichletPolynomial(), 0.7).empty());
    CHECK_THROWS_AS(rl_apply(DirichletPolynomial::monomial(1, {1.0, 0.0}), 1.0),
                    precondition_error);
    CHECK_THROWS_AS(rl_apply(e2, 0.0), precondition_error);
    CHECK_THROWS_AS(rl_apply(e2, -1.0), precondition_error);
    CHECK_THROWS_AS(rl_apply(e2, 65.0), precondition_error);
}

TEST_CASE("half-order applied twice equals order one") {
    const auto f = DirichletPolynomial::monomial(2, {1.0, 0.0}) +
                   DirichletPolynomial::monomial(7, {5.0, 0.0});
    const auto a = rl_apply(rl_apply(f, 0.5), 0.5);
    const auto b = rl_apply(f, 1.0);
    REQUIRE(a.indices() == b.indices());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(std::abs(a.coefficients()[i] - b.coefficients()[i]) <=
              1e-14 * std::abs(b.coefficients()[i]));
}

TEST_CASE("semigroup law on random polynomials") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        const auto f = random_zero_first(61, trial);
        const double s = 3.0 * rng::uniform(61, trial, 100) + 1e-3;
        const double t = 3.0 * rng::uniform(61, trial, 101) + 1e-3;
        const auto a = rl_apply(rl_apply(f, s), t);
        const auto b = rl_apply(f, s + t);
        REQUIRE(a.indices() == b.indices());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(std::abs(a.coefficients()[i] - b.coefficients()[i]) <=
                  1e-13 * std::abs(b.coefficients()[i]));
    }
}

TEST_CASE("linearity of the coefficient action") {
    const auto f = random_zero_first(67, 0);
    const auto g = random_zero_first(67, 1);
    const Complex a(0.7, -1.2), b(-0.3, 0.4);
    const auto lhs = rl_apply(a * f + b * g, 1.3);
    const auto rhs = a * rl_apply(f, 1.3) + b * rl_apply(g, 1.3);
    REQUIRE(lhs.indices() == rhs.indices());
    for (std::size_t i = 0; i < lhs.size(); ++i)
        CHECK(std::abs(lhs.coefficients()[i] - rhs.coefficients()[i]) <= 1e-13);
}

TEST_CASE("operator commutes with translation and character twists") {
    const auto f = random_zero_first(71, 0);
    const double t = 0.8, eps = 0.45;
    const auto a = rl_apply(f.translate(eps), t);
    const auto b = rl_apply(f, t).translate(eps);
    REQUIRE(a.indices() == b.indices());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(std::abs(a.coefficients()[i] - b.coefficients()[i]) <= 1e-14);

    const auto chi = sample_characters(support_primes(f), 1, 5)[0];
    const auto twist = [&](const DirichletPolynomial& h) {
        std::vector<std::pair<std::uint64_t, Complex>> terms;
        for (std::size_t i = 0; i < h.size(); ++i)
            terms.emplace_back(h.indices()[i], h.coefficients()[i] * chi.value(h.indices()[i]));
        return DirichletPolynomial::from_terms(std::move(terms));
    };
    const auto c = rl_apply(twist(f), t);
    const auto d = twist(rl_apply(f, t));
    REQUIRE(c.indices() == d.indices());
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(std::abs(c.coefficients()[i] - d.coefficients()[i]) <= 1e-14);
}

TEST_CASE("integral form matches the coefficient form") {
    const auto f2 = DirichletPolynomial::monomial(2, {1.0, 0.0});
    const Complex v1 = rl_apply_quadrature(f2, 1.0, {1.0, 0.0});
    CHECK(std::abs(v1 - Complex(0.5 / std::log(2.0), 0.0)) < 1e-6);
    CHECK(v1.real() == doctest::Approx(0.721348).epsilon(1e-5));
    CHECK(std::abs(v1 - rl_apply(f2, 1.0).evaluate({1.0, 0.0})) < 1e-6);

    const auto f3 = DirichletPolynomial::monomial(3, {1.0, 0.0});
    const Complex v2 = rl_apply_quadrature(f3, 0.5, {0.2, 0.0});
    CHECK(std::abs(v2 - rl_apply(f3, 0.5).evaluate({0.2, 0.0})) < 1e-6);

    const Complex v3 = rl_apply_quadrature(f2, 2.0, {1.0, 0.0});
    CHECK(std::abs(v3 - Complex(0.5 / (std::log(2.0) * std::log(2.0)), 0.0)) < 1e-6);

    CHECK_THROWS_AS(rl_apply_quadrature(f2, 1.0, {-0.1, 0.0}), precondition_error);
    CHECK_THROWS_AS(
        rl_apply_quadrature(DirichletPolynomial::monomial(1, {1.0, 0.0}), 1.0, {1.0, 0.0}),
        precondition_error);
}

TEST_CASE("kernel constant against 2 pi / Gamma(t+1)") {
    const KtResult r1 = kt_constant(1.0, 1e-6);
    CHECK(r1.ok);
    CHECK(r1.value == doctest::Approx(2.0 * M_PI).epsilon(1e-6));

    const KtResult r2 = kt_constant(2.0, 1e-6);
    CHECK(r2.value == doctest::Approx(M_PI).epsilon(1e-6));

    const KtResult rh = kt_constant(0.5, 1e-6);
    CHECK(rh.value == doctest::Approx(4.0 * std::sqrt(M_PI)).epsilon(1e-6));
    CHECK(rh.value == doctest::Approx(7.089815).epsilon(1e-6));

    // decay-based truncation cannot serve hard tolerances near t = 0
    CHECK_THROWS_AS(kt_constant(0.05, 1e-12), tolerance_error);
}

TEST_CASE("boundary-line reconstruction recovers point values") {
    const auto f2 = DirichletPolynomial::monomial(2, {1.0, 0.0});
    const Complex r1 = reconstruct(f2, 1.0, 1.0, 1e-4);
    CHECK(std::abs(r1 - Complex(0.5, 0.0)) < 1e-4);

    const auto f = f2 - DirichletPolynomial::monomial(3, {1.0, 0.0});
    const Complex r2 = reconstruct(f, 2.0, 0.7, 1e-4);
    CHECK(std::abs(r2 - f.evaluate({0.7, 0.0})) < 1e-4);

    CHECK(std::abs(reconstruct(DirichletPolynomial(), 1.0, 1.0, 1e-4)) == 0.0);
}

TEST_CASE("integer orders invert the derivative up to sign") {
    for (int m = 1; m <= 3; ++m) {
        const auto f = random_zero_first(79, static_cast<std::uint64_t>(m));
        auto g = f.derivative(m);
        if (m % 2 == 1) g = Complex(-1.0, 0.0) * g;
        auto back = g;
        for (int i = 0; i < m; ++i) back = rl_apply(back, 1.0);
        REQUIRE(back.indices() == f.indices());
        for (std::size_t i = 0; i < f.size(); ++i)
            CHECK(std::abs(back.coefficients()[i] - f.coefficients()[i]) <=
                  1e-12 * std::abs(f.coefficients()[i]));
    }
}
