#include <doctest.h>

#include <cmath>
#include <complex>

#include "dirichlet/errors.hpp"
#include "dirichlet/polynomial.hpp"
#include "dirichlet/rng.hpp"

using namespace dirichlet;

namespace {

DirichletPolynomial random_poly(std::uint64_t seed, std::uint64_t trial,
                                int max_terms = 20, std::uint64_t max_index = 50) {
    std::vector<std::pair<std::uint64_t, Complex>> terms;
    const int k = 2 + static_cast<int>(rng::bits(seed, trial, 0) % (max_terms - 1));
    for (int j = 0; j < k; ++j) {
        const std::uint64_t n = 1 + rng::bits(seed, trial, 3 * j + 1) % max_index;
        terms.emplace_back(n, Complex(2.0 * rng::uniform(seed, trial, 3 * j + 2) - 1.0,
                                      2.0 * rng::uniform(seed, trial, 3 * j + 3) - 1.0));
    }
    return DirichletPolynomial::from_terms(std::move(terms));
}

// ordered m-tuples of integers >= 1 with product n
long brute_force_dm(int m, std::uint64_t n) {
    if (m == 1) return 1;
    long count = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) count += brute_force_dm(m - 1, n / d);
    return count;
}

} // namespace

TEST_CASE("evaluate basic values") {
    const auto e2 = DirichletPolynomial::monomial(2, {1.0, 0.0});
    CHECK(e2.evaluate({0.0, 0.0}).real() == doctest::Approx(1.0));

    const auto f = e2 + DirichletPolynomial::monomial(3, {1.0, 0.0});
    CHECK(f.evaluate({1.0, 0.0}).real() == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(f.evaluate({1.0, 0.0}).imag() == doctest::Approx(0.0));
}

TEST_CASE("zeta truncation at s=2 approaches pi^2/6 within the integral tail bound") {
    const std::uint64_t N = 10000;
    const auto z = zeta_truncation(N);
    const double got = z.evaluate({2.0, 0.0}).real();
    const double target = M_PI * M_PI / 6.0;
    CHECK(std::fabs(got - target) < 1.0 / static_cast<double>(N)); // tail < int_N^inf x^-2
    CHECK(got < target);
}

TEST_CASE("translate scales coefficients by n^-sigma") {
    const auto e2 = DirichletPolynomial::monomial(2, {1.0, 0.0});
    CHECK(e2.translate(1.0).coefficient(2).real() == doctest::Approx(0.5));

    const auto f = random_poly(7, 0);
    CHECK(f.translate(0.0) == f);

    const auto g = DirichletPolynomial::monomial(2, {1.0, 0.0}) +
                   DirichletPolynomial::monomial(5, {1.0, 0.0});
    const auto lhs = g.translate(0.3).translate(0.7);
    const auto rhs = g.translate(1.0);
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i)
        CHECK(std::abs(lhs.coefficients()[i] - rhs.coefficients()[i]) < 1e-15);

    CHECK_THROWS_AS(g.translate(-0.1), precondition_error);
}

TEST_CASE("translate then evaluate equals evaluate at shifted point") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const auto f = random_poly(11, trial);
        const double sigma = 2.0 * rng::uniform(11, trial, 100);
        const Complex s(2.0 * rng::uniform(11, trial, 101) - 0.5,
                        4.0 * rng::uniform(11, trial, 102) - 2.0);
        const Complex a = f.translate(sigma).evaluate(s);
        const Complex b = f.evaluate(s + sigma);
        CHECK(std::abs(a - b) <= 1e-12 * (std::abs(b) + 1.0));
    }
}

TEST_CASE("convolution of monomials multiplies indices") {
    const auto f = DirichletPolynomial::monomial(2, {1.0, 0.0});
    const auto g = DirichletPolynomial::monomial(3, {1.0, 0.0});
    const auto h = convolve(f, g);
    REQUIRE(h.size() == 1);
    CHECK(h.indices()[0] == 6);
    CHECK(h.coefficient(6).real() == doctest::Approx(1.0));
}

TEST_CASE("zeta * zeta carries divisor counts") {
    const auto z = zeta_truncation(100);
    const auto z2 = convolve(z, z);
    // brute-force divisor count oracle
    const auto divisors = [](std::uint64_t n) {
        long c = 0;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) ++c;
        return c;
    };
    CHECK(z2.coefficient(4).real() == doctest::Approx(divisors(4)));   // 3
    CHECK(z2.coefficient(12).real() == doctest::Approx(divisors(12))); // 6
    CHECK(z2.coefficient(4).real() == doctest::Approx(3.0));
    CHECK(z2.coefficient(12).real() == doctest::Approx(6.0));
}

TEST_CASE("convolution is commutative and associative on random polynomials") {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        const auto f = random_poly(13, 3 * trial);
        const auto g = random_poly(13, 3 * trial + 1);
        const auto h = random_poly(13, 3 * trial + 2);
        const auto fg = convolve(f, g);
        const auto gf = convolve(g, f);
        REQUIRE(fg.indices() == gf.indices());
        for (std::size_t i = 0; i < fg.size(); ++i)
            CHECK(std::abs(fg.coefficients()[i] - gf.coefficients()[i]) <=
                  1e-14 * std::abs(fg.coefficients()[i]) + 1e-300);
        const auto a = convolve(fg, h);
        const auto b = convolve(f, convolve(g, h));
        REQUIRE(a.indices() == b.indices());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(std::abs(a.coefficients()[i] - b.coefficients()[i]) <=
                  1e-12 * (std::abs(a.coefficients()[i]) + 1.0));
    }
}

TEST_CASE("evaluate is multiplicative across convolution") {
    for (std::uint64_t trial = 0; trial < 15; ++trial) {
        const auto f = random_poly(17, 2 * trial);
        const auto g = random_poly(17, 2 * trial + 1);
        const Complex s(1.5 * rng::uniform(17, trial, 50), 3.0 * rng::uniform(17, trial, 51) - 1.5);
        const Complex lhs = convolve(f, g).evaluate(s);
        const Complex rhs = f.evaluate(s) * g.evaluate(s);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(rhs) + 1.0));
    }
}

TEST_CASE("convolution overflow is reported") {
    const auto f = DirichletPolynomial::monomial(1ull << 40, {1.0, 0.0});
    CHECK_THROWS_AS(convolve(f, f), precondition_error);
}

TEST_CASE("zeta_power coefficients are ordered factorization counts") {
    CHECK(zeta_power(1, 10).coefficient(1).real() == doctest::Approx(1.0));
    CHECK(zeta_power(3, 10).coefficient(1).real() == doctest::Approx(1.0));
    CHECK(zeta_power(2, 10).coefficient(6).real() == doctest::Approx(brute_force_dm(2, 6)));
    CHECK(zeta_power(2, 10).coefficient(6).real() == doctest::Approx(4.0));
    CHECK(zeta_power(3, 10).coefficient(4).real() == doctest::Approx(brute_force_dm(3, 4)));
    CHECK(zeta_power(3, 10).coefficient(4).real() == doctest::Approx(6.0));

    for (int m = 1; m <= 4; ++m) {
        const auto zm = zeta_power(m, 200);
        for (std::uint64_t n = 1; n <= 200; ++n)
            CHECK(zm.coefficient(n).real() == doctest::Approx(brute_force_dm(m, n)));
    }
}

TEST_CASE("derivative follows the (-log n)^m rule") {
    const auto e2 = DirichletPolynomial::monomial(2, {1.0, 0.0});
    const auto d1 = e2.derivative(1);
    CHECK(d1.coefficient(2).real() == doctest::Approx(-std::log(2.0)));

    const auto c = DirichletPolynomial::monomial(1, {1.0, 0.0});
    CHECK(c.derivative(1).empty());

    // coefficient identity: derivative then dividing by -log n recovers f
    const auto f = DirichletPolynomial::monomial(3, {1.0, 0.0});
    const auto df = f.derivative(1);
    CHECK(df.coefficient(3).real() / (-std::log(3.0)) == doctest::Approx(1.0));
}

TEST_CASE("add and scale behave pointwise with canonical pruning") {
    const auto f = random_poly(23, 0);
    CHECK((f + Complex(-1.0, 0.0) * f).empty());

    const auto s2 = DirichletPolynomial::monomial(2, {1.0, 0.0}).scaled({2.0, 0.0});
    CHECK(s2.evaluate({0.0, 0.0}).real() == doctest::Approx(2.0));

    const auto g = DirichletPolynomial::monomial(2, {1.0, 0.0}) +
                   DirichletPolynomial::monomial(3, {1.0, 0.0});
    REQUIRE(g.size() == 2);
    CHECK(g.indices()[0] == 2);
    CHECK(g.indices()[1] == 3);
}

TEST_CASE("from_terms merges duplicates and rejects bad indices") {
    const auto f = DirichletPolynomial::from_terms({{2, {1.0, 0.0}}, {2, {-1.0, 0.0}}});
    CHECK(f.empty());
    CHECK_THROWS_AS(DirichletPolynomial::from_terms({{0, {1.0, 0.0}}}), precondition_error);
}
