#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dirichlet {

// Smallest-prime-factor sieve: O(limit) construction, O(log n) factorization.
class SpfSieve {
public:
    explicit SpfSieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    bool is_prime(std::uint64_t n) const;
    std::uint64_t smallest_factor(std::uint64_t n) const;

    // prime factorization (p, e) with p ascending; empty for n = 1.
    // n < 1 or n > limit is rejected.
    std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) const;

    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

// one-off factorization by trial division (no sieve memory); n >= 1
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// ascending primes <= limit
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

} // namespace dirichlet
