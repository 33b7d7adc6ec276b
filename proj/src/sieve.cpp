#include "dirichlet/sieve.hpp"

#include "dirichlet/errors.hpp"

namespace dirichlet {

SpfSieve::SpfSieve(std::uint64_t limit) : limit_(limit) {
    if (limit < 1) throw precondition_error("SpfSieve: limit must be >= 1");
    if (limit > (1ull << 32)) throw precondition_error("SpfSieve: limit too large");
    spf_.assign(limit + 1, 0);
    // linear sieve: each composite crossed once by its smallest prime factor
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[i] || i * p > limit) break;
            spf_[i * p] = p;
        }
    }
}

bool SpfSieve::is_prime(std::uint64_t n) const {
    if (n < 2 || n > limit_) return false;
    return spf_[n] == n;
}

std::uint64_t SpfSieve::smallest_factor(std::uint64_t n) const {
    if (n < 2 || n > limit_) throw precondition_error("SpfSieve: index out of range");
    return spf_[n];
}

std::vector<std::pair<std::uint64_t, int>> SpfSieve::factorize(std::uint64_t n) const {
    if (n < 1) throw precondition_error("factorize: n must be >= 1");
    if (n > limit_) throw precondition_error("SpfSieve: index out of range");
    std::vector<std::pair<std::uint64_t, int>> out;
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    return out;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n < 1) throw precondition_error("factorize: n must be >= 1");
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<bool> comp(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

} // namespace dirichlet
