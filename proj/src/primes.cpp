#include "finitea/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finitea {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2) lo = 2;
    if (lo > hi) return {};
    if (hi >= (std::uint64_t{1} << 62)) throw std::invalid_argument("sieve_primes: hi too large");

    const auto base = small_primes(isqrt(hi));
    std::vector<std::uint64_t> out;
    constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;
    std::vector<char> composite;
    for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
        const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
        composite.assign(seg_hi - seg_lo + 1, 0);
        for (std::uint64_t q : base) {
            if (q * q > seg_hi) break;
            std::uint64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
            for (std::uint64_t j = start; j <= seg_hi; j += q) composite[j - seg_lo] = 1;
        }
        for (std::uint64_t n = seg_lo; n <= seg_hi; ++n)
            if (!composite[n - seg_lo]) out.push_back(n);
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
    return out;
}

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace finitea
