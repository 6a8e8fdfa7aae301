#pragma once

#include <cstdint>
#include <vector>

namespace finitea {

/// Primes in [lo, hi], ascending, by a segmented sieve of Eratosthenes.
/// An empty interval (lo > hi) yields an empty list.
std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi);

/// Deterministic trial division; intended for small inputs and tests.
bool is_prime_trial(std::uint64_t n);

}  // namespace finitea
