#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dirichlet/polynomial.hpp"

namespace dirichlet {

// A point of the infinite polytorus: unimodular values chi(p) on a finite
// prime set, extended to all indices by complete multiplicativity.
class Character {
public:
    Character() = default;
    Character(std::vector<std::uint64_t> primes, std::vector<Complex> values);

    // chi(p) = 1 on the given primes
    static Character trivial(std::vector<std::uint64_t> primes);

    const std::vector<std::uint64_t>& primes() const { return primes_; }
    const std::vector<Complex>& values() const { return values_; }

    Complex at_prime(std::uint64_t p) const;           // throws if p missing
    Complex value(std::uint64_t n) const;              // chi(n) via factorization

private:
    std::vector<std::uint64_t> primes_; // ascending
    std::vector<Complex> values_;
};

// sum a_n chi(n) n^{-s}; with s = 0 this is the Bohr lift of f evaluated at
// the polytorus point chi.  Every prime dividing a support index must carry
// a chi value.
Complex bohr_eval(const DirichletPolynomial& f, const Character& chi, Complex s);

// Haar samples: chi(p) = exp(2 pi i u), u uniform, via the counter-based
// generator; sample k is stream k of the seed, so the stream is identical
// for any worker layout.
std::vector<Character> sample_characters(const std::vector<std::uint64_t>& primes,
                                         std::uint64_t count, std::uint64_t seed,
                                         std::uint64_t first_index = 0);

// ascending list of distinct primes dividing some support index of f
std::vector<std::uint64_t> support_primes(const DirichletPolynomial& f);

} // namespace dirichlet
