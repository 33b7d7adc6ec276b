#include "dirichlet/riemann_liouville.hpp"

#include <cmath>

#include "dirichlet/errors.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/special_functions.hpp"

namespace dirichlet {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_t(double t) {
    if (!(t > 0.0) || t > 64.0)
        throw precondition_error("Riemann-Liouville order t must lie in (0, 64]");
}

void check_zero_first(const DirichletPolynomial& f, const char* who) {
    if (f.constant_coefficient() != Complex(0.0, 0.0))
        throw precondition_error(std::string(who) +
                                 ": first coefficient must be zero (the integral diverges otherwise)");
}

} // namespace

DirichletPolynomial rl_apply(const DirichletPolynomial& f, double t) {
    check_t(t);
    check_zero_first(f, "rl_apply");
    std::vector<std::uint64_t> idx = f.indices();
    std::vector<Complex> coef = f.coefficients();
    const auto& logs = f.log_indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
        coef[i] /= std::pow(logs[i], t);
    return DirichletPolynomial::from_sorted(std::move(idx), std::move(coef));
}

Complex rl_apply_quadrature(const DirichletPolynomial& f, double t, Complex s,
                            double rel_tol) {
    check_t(t);
    check_zero_first(f, "rl_apply_quadrature");
    if (!(s.real() > 0.0))
        throw precondition_error("rl_apply_quadrature: need Re s > 0");
    if (f.empty()) return {0.0, 0.0};

    // |f(x+s)| <= M 2^{-x} with M = sum |a_n| n^{-Re s}; truncate where
    // int_X^inf x^{t-1} 2^{-x} dx = Gamma(t, X log 2) / (log 2)^t is negligible
    double M = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        M += std::abs(f.coefficients()[i]) * std::exp(-s.real() * f.log_indices()[i]);
    const double scale = M / std::tgamma(t); // crude magnitude of the result
    double X = 40.0;
    while (upper_incomplete_gamma(t, X * std::log(2.0)) / std::pow(std::log(2.0), t) *
               M / std::tgamma(t) > rel_tol * scale * 0.25 && X < 400.0)
        X *= 1.5;

    QuadResultC q;
    if (t < 1.0) {
        // x = y^{1/t} removes the endpoint singularity:
        //   int_0^inf x^{t-1} f(x+s) dx = (1/t) int_0^inf f(y^{1/t} + s) dy
        const double Y = std::pow(X, t);
        const auto integrand = [&](double y) -> Complex {
            const double x = y <= 0.0 ? 0.0 : std::pow(y, 1.0 / t);
            return f.evaluate(s + Complex(x, 0.0)) / t;
        };
        q = integrate(integrand, 0.0, Y, 0.0, rel_tol * 0.5, 4000);
    } else {
        const auto integrand = [&](double x) -> Complex {
            return x <= 0.0 ? Complex(0.0, 0.0)
                            : std::exp((t - 1.0) * std::log(x)) * f.evaluate(s + Complex(x, 0.0));
        };
        q = integrate(integrand, 0.0, X, 0.0, rel_tol * 0.5, 4000);
    }
    return q.value / std::tgamma(t);
}

KtResult kt_constant(double t, double rel_tol) {
    check_t(t);
    KtResult r;
    r.reference = kTwoPi / std::tgamma(t + 1.0);

    // integrand g(y) e^{-iy} with g(y) = e (1-iy)^{-(t+1)}; two integrations
    // by parts give the tail beyond T as
    //   2 Re[ -i e^{-iT} g(T) - e^{-iT} g'(T) ] + R,  |R| <= 2 e (t+1) T^{-(t+2)}
    const double e1 = std::exp(1.0);
    const double tol_abs = 0.5 * rel_tol * r.reference;
    double T = std::pow(2.0 * e1 * (t + 1.0) / tol_abs, 1.0 / (t + 2.0));
    T = std::max(T, 8.0);
    if (T > 2.0e5) {
        r.truncation = T;
        throw tolerance_error("kt_constant: truncation T=" + std::to_string(T) +
                              " beyond budget for t=" + std::to_string(t) +
                              "; decay-based tail control is too weak near t = 0");
    }
    r.truncation = T;

    const auto integrand = [&](double y) -> Complex {
        const Complex z(1.0, -y);
        return std::exp(Complex(1.0, -y)) * std::pow(z, -(t + 1.0));
    };
    QuadResultC q = integrate_windowed(integrand, -T, T, kTwoPi, tol_abs * 0.5);

    const Complex zT(1.0, -T);
    const Complex gT = e1 * std::pow(zT, -(t + 1.0));
    const Complex gpT = Complex(0.0, 1.0) * (t + 1.0) * e1 * std::pow(zT, -(t + 2.0));
    const Complex eT = std::exp(Complex(0.0, -T));
    const Complex tail_plus = -Complex(0.0, 1.0) * eT * gT - eT * gpT;

    r.value = q.value.real() + 2.0 * tail_plus.real();
    r.achieved_rel_error = std::fabs(r.value - r.reference) / r.reference;
    r.ok = r.achieved_rel_error <= rel_tol;
    if (!r.ok)
        throw tolerance_error("kt_constant: achieved relative error " +
                              std::to_string(r.achieved_rel_error) + " exceeds " +
                              std::to_string(rel_tol));
    return r;
}

Complex reconstruct(const DirichletPolynomial& f, double t, double theta, double tol) {
    check_t(t);
    check_zero_first(f, "reconstruct");
    if (!(theta > 0.0)) throw precondition_error("reconstruct: need theta > 0");
    if (f.empty()) return {0.0, 0.0};

    const DirichletPolynomial g = rl_apply(f, t);
    double B = 0.0; // sum |a_n| (log n)^{-t}
    for (const auto& c : g.coefficients()) B += std::abs(c);

    // tail bound 2 B T^{-t} / t < tol / 2
    double T = std::pow(4.0 * B / (t * tol), 1.0 / t);
    T = std::max(T, 4.0 * theta);
    if (T > 5.0e6)
        throw tolerance_error("reconstruct: truncation T=" + std::to_string(T) +
                              " beyond budget at tol=" + std::to_string(tol));

    const double max_freq = std::max(1.0, g.log_indices().empty() ? 1.0 : g.log_indices().back());
    const double window = kTwoPi / max_freq;
    const auto integrand = [&](double tau) -> Complex {
        const Complex itau(0.0, tau);
        return g.evaluate(itau) * std::pow(Complex(theta, -tau), -(t + 1.0));
    };
    QuadResultC q = integrate_windowed(integrand, -T, T, window, tol * 0.25);
    const double kt = kTwoPi / std::tgamma(t + 1.0);
    return q.value / kt;
}

} // namespace dirichlet
