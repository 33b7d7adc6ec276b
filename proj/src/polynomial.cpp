#include "dirichlet/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "dirichlet/errors.hpp"
#include "dirichlet/kernels.hpp"

namespace dirichlet {

void DirichletPolynomial::rebuild_logs() {
    logs_.resize(idx_.size());
    for (std::size_t i = 0; i < idx_.size(); ++i)
        logs_[i] = std::log(static_cast<double>(idx_[i]));
}

DirichletPolynomial DirichletPolynomial::monomial(std::uint64_t n, Complex c) {
    if (n < 1) throw precondition_error("monomial: index must be >= 1");
    DirichletPolynomial f;
    if (c != Complex(0.0, 0.0)) {
        f.idx_ = {n};
        f.coef_ = {c};
        f.rebuild_logs();
    }
    return f;
}

DirichletPolynomial DirichletPolynomial::from_terms(
    std::vector<std::pair<std::uint64_t, Complex>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    DirichletPolynomial f;
    for (const auto& [n, c] : terms) {
        if (n < 1) throw precondition_error("from_terms: index must be >= 1");
        if (!f.idx_.empty() && f.idx_.back() == n) {
            f.coef_.back() += c;
            if (f.coef_.back() == Complex(0.0, 0.0)) {
                f.idx_.pop_back();
                f.coef_.pop_back();
            }
        } else if (c != Complex(0.0, 0.0)) {
            f.idx_.push_back(n);
            f.coef_.push_back(c);
        }
    }
    f.rebuild_logs();
    return f;
}

DirichletPolynomial DirichletPolynomial::from_sorted(std::vector<std::uint64_t> idx,
                                                     std::vector<Complex> coef) {
    assert(idx.size() == coef.size());
    assert(std::is_sorted(idx.begin(), idx.end()));
    DirichletPolynomial f;
    f.idx_ = std::move(idx);
    f.coef_ = std::move(coef);
    f.rebuild_logs();
    return f;
}

Complex DirichletPolynomial::coefficient(std::uint64_t n) const {
    auto it = std::lower_bound(idx_.begin(), idx_.end(), n);
    if (it == idx_.end() || *it != n) return {0.0, 0.0};
    return coef_[static_cast<std::size_t>(it - idx_.begin())];
}

Complex DirichletPolynomial::constant_coefficient() const {
    if (!idx_.empty() && idx_.front() == 1) return coef_.front();
    return {0.0, 0.0};
}

Complex DirichletPolynomial::evaluate(Complex s) const {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < idx_.size(); ++i)
        acc += coef_[i] * std::exp(-s * logs_[i]);
    return acc;
}

DirichletPolynomial DirichletPolynomial::translate(double sigma) const {
    if (sigma < 0.0)
        throw precondition_error("translate: only right translations (sigma >= 0)");
    DirichletPolynomial f;
    f.idx_ = idx_;
    f.logs_ = logs_;
    f.coef_.resize(coef_.size());
    for (std::size_t i = 0; i < coef_.size(); ++i)
        f.coef_[i] = coef_[i] * std::exp(-sigma * logs_[i]);
    return f;
}

DirichletPolynomial DirichletPolynomial::derivative(int m) const {
    if (m < 1) throw precondition_error("derivative: order must be >= 1");
    std::vector<std::uint64_t> idx;
    std::vector<Complex> coef;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] == 1) continue; // (-log 1)^m = 0
        idx.push_back(idx_[i]);
        coef.push_back(coef_[i] * sign * std::pow(logs_[i], static_cast<double>(m)));
    }
    return from_sorted(std::move(idx), std::move(coef));
}

DirichletPolynomial DirichletPolynomial::scaled(Complex lambda) const {
    if (lambda == Complex(0.0, 0.0)) return {};
    DirichletPolynomial f;
    f.idx_ = idx_;
    f.logs_ = logs_;
    f.coef_.resize(coef_.size());
    for (std::size_t i = 0; i < coef_.size(); ++i) f.coef_[i] = lambda * coef_[i];
    return f;
}

bool DirichletPolynomial::operator==(const DirichletPolynomial& other) const {
    return idx_ == other.idx_ && coef_ == other.coef_;
}

DirichletPolynomial add(const DirichletPolynomial& f, const DirichletPolynomial& g) {
    std::vector<std::uint64_t> idx;
    std::vector<Complex> coef;
    idx.reserve(f.size() + g.size());
    coef.reserve(f.size() + g.size());
    const auto &fi = f.indices(), &gi = g.indices();
    const auto &fc = f.coefficients(), &gc = g.coefficients();
    std::size_t a = 0, b = 0;
    while (a < fi.size() || b < gi.size()) {
        std::uint64_t n;
        Complex c;
        if (b == gi.size() || (a < fi.size() && fi[a] < gi[b])) {
            n = fi[a]; c = fc[a]; ++a;
        } else if (a == fi.size() || gi[b] < fi[a]) {
            n = gi[b]; c = gc[b]; ++b;
        } else {
            n = fi[a]; c = fc[a] + gc[b]; ++a; ++b;
        }
        if (c != Complex(0.0, 0.0)) { idx.push_back(n); coef.push_back(c); }
    }
    return DirichletPolynomial::from_sorted(std::move(idx), std::move(coef));
}

DirichletPolynomial operator+(const DirichletPolynomial& f, const DirichletPolynomial& g) {
    return add(f, g);
}

DirichletPolynomial operator-(const DirichletPolynomial& f, const DirichletPolynomial& g) {
    return add(f, g.scaled({-1.0, 0.0}));
}

DirichletPolynomial operator*(Complex lambda, const DirichletPolynomial& f) {
    return f.scaled(lambda);
}

DirichletPolynomial convolve(const DirichletPolynomial& f, const DirichletPolynomial& g,
                             std::uint64_t index_bound) {
    const auto &fi = f.indices(), &gi = g.indices();
    const auto &fc = f.coefficients(), &gc = g.coefficients();
    constexpr std::uint64_t kMaxIndex = 1ull << 62;
    std::vector<std::pair<std::uint64_t, Complex>> prod;
    prod.reserve(std::min<std::size_t>(fi.size() * gi.size(), 1u << 22));
    for (std::size_t a = 0; a < fi.size(); ++a) {
        for (std::size_t b = 0; b < gi.size(); ++b) {
            if (fi[a] > kMaxIndex / gi[b]) {
                if (index_bound) break; // gi ascending: all further b overflow too
                throw precondition_error("convolve: index product overflows");
            }
            const std::uint64_t n = fi[a] * gi[b];
            if (index_bound && n > index_bound) {
                // gi ascending: all further b give larger products
                break;
            }
            prod.emplace_back(n, fc[a] * gc[b]);
        }
    }
    std::sort(prod.begin(), prod.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::uint64_t> idx;
    std::vector<Complex> coef;
    for (const auto& [n, c] : prod) {
        if (!idx.empty() && idx.back() == n) {
            coef.back() += c;
        } else {
            idx.push_back(n);
            coef.push_back(c);
        }
    }
    // prune exact zeros created by cancellation
    std::size_t w = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (coef[i] == Complex(0.0, 0.0)) continue;
        idx[w] = idx[i];
        coef[w] = coef[i];
        ++w;
    }
    idx.resize(w);
    coef.resize(w);
    return DirichletPolynomial::from_sorted(std::move(idx), std::move(coef));
}

DirichletPolynomial zeta_truncation(std::uint64_t N) {
    if (N < 1) throw precondition_error("zeta_truncation: N must be >= 1");
    std::vector<std::uint64_t> idx(N);
    std::vector<Complex> coef(N, Complex(1.0, 0.0));
    for (std::uint64_t n = 1; n <= N; ++n) idx[n - 1] = n;
    return DirichletPolynomial::from_sorted(std::move(idx), std::move(coef));
}

DirichletPolynomial zeta_power(int m, std::uint64_t N) {
    if (m < 1) throw precondition_error("zeta_power: m must be >= 1");
    if (N < 1) throw precondition_error("zeta_power: N must be >= 1");
    std::vector<double> cur(N + 1, 1.0), next;
    cur[0] = 0.0;
    for (int k = 1; k < m; ++k) {
        kernels::zeta_multiply_parallel(cur, next);
        cur.swap(next);
    }
    std::vector<std::uint64_t> idx(N);
    std::vector<Complex> coef(N);
    for (std::uint64_t n = 1; n <= N; ++n) {
        idx[n - 1] = n;
        coef[n - 1] = Complex(cur[n], 0.0);
    }
    return DirichletPolynomial::from_sorted(std::move(idx), std::move(coef));
}

} // namespace dirichlet
