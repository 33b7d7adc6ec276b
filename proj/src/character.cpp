#include "dirichlet/character.hpp"

#include <algorithm>
#include <cmath>

#include "dirichlet/errors.hpp"
#include "dirichlet/rng.hpp"
#include "dirichlet/sieve.hpp"

namespace dirichlet {

Character::Character(std::vector<std::uint64_t> primes, std::vector<Complex> values)
    : primes_(std::move(primes)), values_(std::move(values)) {
    if (primes_.size() != values_.size())
        throw precondition_error("Character: primes/values size mismatch");
    if (!std::is_sorted(primes_.begin(), primes_.end()))
        throw precondition_error("Character: primes must be ascending");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (factorize(primes_[i]).size() != 1 || factorize(primes_[i])[0].second != 1)
            throw precondition_error("Character: keys must be prime");
        if (std::fabs(std::abs(values_[i]) - 1.0) > 1e-12)
            throw precondition_error("Character: values must be unimodular");
    }
}

Character Character::trivial(std::vector<std::uint64_t> primes) {
    std::vector<Complex> ones(primes.size(), Complex(1.0, 0.0));
    return Character(std::move(primes), std::move(ones));
}

Complex Character::at_prime(std::uint64_t p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p)
        throw precondition_error("Character: no value stored for prime " + std::to_string(p));
    return values_[static_cast<std::size_t>(it - primes_.begin())];
}

Complex Character::value(std::uint64_t n) const {
    if (n < 1) throw precondition_error("Character::value: n must be >= 1");
    Complex out(1.0, 0.0);
    for (const auto& [p, e] : factorize(n)) {
        const Complex cp = at_prime(p);
        Complex pw(1.0, 0.0);
        for (int k = 0; k < e; ++k) pw *= cp;
        out *= pw;
    }
    return out;
}

Complex bohr_eval(const DirichletPolynomial& f, const Character& chi, Complex s) {
    Complex acc(0.0, 0.0);
    const auto& idx = f.indices();
    const auto& coef = f.coefficients();
    const auto& logs = f.log_indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
        acc += coef[i] * chi.value(idx[i]) * std::exp(-s * logs[i]);
    return acc;
}

std::vector<Character> sample_characters(const std::vector<std::uint64_t>& primes,
                                         std::uint64_t count, std::uint64_t seed,
                                         std::uint64_t first_index) {
    if (count < 1) throw precondition_error("sample_characters: count must be >= 1");
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<Character> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<Complex> vals(primes.size());
        for (std::size_t j = 0; j < primes.size(); ++j)
            vals[j] = std::polar(1.0, two_pi * rng::uniform(seed, first_index + k, j));
        out.emplace_back(primes, std::move(vals));
    }
    return out;
}

std::vector<std::uint64_t> support_primes(const DirichletPolynomial& f) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n : f.indices())
        for (const auto& [p, e] : factorize(n)) out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace dirichlet
