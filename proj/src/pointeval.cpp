#include "dirichlet/pointeval.hpp"

#include <algorithm>
#include <cmath>

#include "dirichlet/divisor_series.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/measures.hpp"
#include "dirichlet/norms.hpp"

namespace dirichlet {

const char* space_name(KernelValue::Space s) {
    switch (s) {
    case KernelValue::Space::A2Alpha: return "a2";
    case KernelValue::Space::A2AlphaInfty: return "a2-infty";
    case KernelValue::Space::H2: return "h2";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kNCap = 100000000ull;

KernelValue kernel_from_sum(double sigma, double omega, std::uint64_t n0,
                            double tol, KernelValue::Space space) {
    if (!(sigma > 0.5)) throw precondition_error("delta norm: kernel diverges unless sigma > 1/2");
    if (!(tol > 0.0)) throw precondition_error("delta norm: tol must be positive");
    const double two_sigma = 2.0 * sigma;
    // |sqrt(S +- hw) - sqrt(S)| <= hw / (2 sqrt(S)); S >= first summand
    const double first = std::exp(-two_sigma * std::log(static_cast<double>(n0)) +
                                  omega * std::log1p(std::log(static_cast<double>(n0))));
    const double hw_target = 2.0 * tol * std::sqrt(first);
    BracketedSum b;
    try {
        b = power_log_sum(two_sigma, omega, n0, hw_target, kNCap);
    } catch (const tolerance_error&) {
        // re-check against the actual sum at the cap: the value-scale target
        // above used only the first summand and can be needlessly strict
        b = power_log_sum(two_sigma, omega, n0, 0.0, kNCap);
        if (b.half_width > 2.0 * tol * std::sqrt(b.value))
            throw tolerance_error(
                "delta norm: requested tol " + std::to_string(tol) +
                " unattainable at N cap; achieved bound " +
                std::to_string(b.half_width / (2.0 * std::sqrt(b.value))));
    }
    KernelValue out;
    out.value = std::sqrt(b.value);
    out.truncation_N = b.terms;
    out.tail_bound = b.half_width / (2.0 * out.value);
    out.space = space;
    return out;
}

} // namespace

KernelValue delta_norm_a2(double sigma, double alpha, bool subspace, double tol) {
    if (!(alpha > -1.0)) throw precondition_error("delta_norm_a2: need alpha > -1");
    return kernel_from_sum(sigma, alpha + 1.0, subspace ? 2 : 1, tol,
                           subspace ? KernelValue::Space::A2AlphaInfty
                                    : KernelValue::Space::A2Alpha);
}

KernelValue delta_norm_h2(double sigma, double tol) {
    return kernel_from_sum(sigma, 0.0, 1, tol, KernelValue::Space::H2);
}

double delta_lower_bound(double sigma, double alpha, int p, const TestFamily& family) {
    if (!(sigma > 0.5)) throw precondition_error("delta_lower_bound: need sigma > 1/2");
    if (p < 2 || p % 2 != 0) throw precondition_error("delta_lower_bound: p must be even");
    const WeightMeasure mu = WeightMeasure::alpha_density(alpha);

    const auto bound_for = [&](const DirichletPolynomial& f) {
        const double num = std::abs(f.evaluate(Complex(sigma, 0.0)));
        const double den = norm_ap(f, mu, static_cast<double>(p)).value;
        return den > 0.0 ? num / den : 0.0;
    };

    switch (family.kind) {
    case TestFamily::Kind::Constant:
        return bound_for(DirichletPolynomial::monomial(1, {1.0, 0.0}));
    case TestFamily::Kind::SingleMonomial:
        return bound_for(DirichletPolynomial::monomial(2, {1.0, 0.0}));
    case TestFamily::Kind::TranslatedZetaPower: {
        // every member is a genuine test function, so any grid maximum is a
        // certified lower bound; optimality is not needed
        double best = bound_for(DirichletPolynomial::monomial(2, {1.0, 0.0}));
        const std::uint64_t N = p == 2 ? family.N : std::min<std::uint64_t>(family.N, 700);
        for (int m = 1; m <= family.max_m; ++m) {
            const DirichletPolynomial zm = zeta_power(m, N);
            for (int j = 0; j < family.epsilon_count; ++j) {
                // translations spanning [ (sigma-1/2)/4, 4(sigma-1/2) ]
                const double eps = (sigma - 0.5) * std::pow(2.0, -2.0 + 4.0 * j /
                                                      std::max(1, family.epsilon_count - 1));
                best = std::max(best, bound_for(zm.translate(eps)));
            }
        }
        return best;
    }
    }
    return 0.0;
}

} // namespace dirichlet
