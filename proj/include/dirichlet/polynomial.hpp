#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace dirichlet {

using Complex = std::complex<double>;

// A Dirichlet polynomial sum a_n n^{-s}: finitely many nonzero complex
// coefficients at integer indices n >= 1.  Canonical form: indices strictly
// ascending, no stored coefficient is exactly zero.  log n is cached per
// support index (it dominates grid evaluation cost).  Immutable after
// construction; every operation returns a new value.
class DirichletPolynomial {
public:
    DirichletPolynomial() = default;

    static DirichletPolynomial monomial(std::uint64_t n, Complex c);
    // merges duplicates, sorts, prunes exact zeros
    static DirichletPolynomial from_terms(std::vector<std::pair<std::uint64_t, Complex>> terms);
    // takes coefficients already sorted / unique (verified in debug builds only)
    static DirichletPolynomial from_sorted(std::vector<std::uint64_t> idx, std::vector<Complex> coef);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }

    const std::vector<std::uint64_t>& indices() const { return idx_; }
    const std::vector<Complex>& coefficients() const { return coef_; }
    const std::vector<double>& log_indices() const { return logs_; }

    Complex coefficient(std::uint64_t n) const;     // 0 when n not in support
    Complex constant_coefficient() const;            // a_1

    // sum a_n exp(-s log n); converges everywhere
    Complex evaluate(Complex s) const;

    // f(sigma + s): coefficient at n scaled by n^{-sigma}; sigma >= 0
    DirichletPolynomial translate(double sigma) const;

    // m-th derivative: a_n -> a_n (-log n)^m (constant term drops)
    DirichletPolynomial derivative(int m) const;

    DirichletPolynomial scaled(Complex lambda) const;

    bool operator==(const DirichletPolynomial& other) const;

private:
    std::vector<std::uint64_t> idx_;
    std::vector<Complex> coef_;
    std::vector<double> logs_;

    void rebuild_logs();
};

DirichletPolynomial add(const DirichletPolynomial& f, const DirichletPolynomial& g);
DirichletPolynomial operator+(const DirichletPolynomial& f, const DirichletPolynomial& g);
DirichletPolynomial operator-(const DirichletPolynomial& f, const DirichletPolynomial& g);
DirichletPolynomial operator*(Complex lambda, const DirichletPolynomial& f);

// Dirichlet multiplication: (f*g)_n = sum_{d|n} f_d g_{n/d}.
// Index products beyond 2^62 are rejected.
// index_bound > 0 discards product indices above the bound.
DirichletPolynomial convolve(const DirichletPolynomial& f, const DirichletPolynomial& g,
                             std::uint64_t index_bound = 0);

// all-ones truncation sum_{n<=N} n^{-s}
DirichletPolynomial zeta_truncation(std::uint64_t N);

// sum_{n<=N} d_m(n) n^{-s}: m-fold divisor coefficients by repeated
// index-bounded zeta multiplication (dense sieve kernel)
DirichletPolynomial zeta_power(int m, std::uint64_t N);

} // namespace dirichlet
