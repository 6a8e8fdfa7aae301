#pragma once

// Gregory polynomials G_n(x), the coefficients of t(1+t)^x / log(1+t).
//
// Multiplying the generating function by log(1+t)/t = sum (-1)^i t^i/(i+1)
// gives the division-free recurrence
//     G_n(x) = binom(x, n) - sum_{j<n} (-1)^{n-j} G_j(x) / (n-j+1),
// used both over Q and mod p.

#include "finitea/polynomial.hpp"
#include "finitea/prime_ctx.hpp"
#include "finitea/rational.hpp"

#include <optional>
#include <vector>

namespace finitea {

/// G_0(x), ..., G_{n_max}(x) by the recurrence.
std::vector<RationalPolynomial> gregory_polynomials(unsigned n_max);
RationalPolynomial gregory_polynomial(unsigned n);

/// G_n(x) from the Stirling-first-kind closed form; n >= 1.
RationalPolynomial gregory_explicit(unsigned n);

/// G_n(x) as the integral of binom(u, n) over [x, x+1].
RationalPolynomial gregory_integral(unsigned n);

/// Exact values G_0(x), ..., G_{n_max}(x) at a rational point, by the recurrence.
std::vector<Rational> gregory_values(const Rational& x, unsigned n_max);

/// G_0(x), ..., G_{n_max}(x) mod p in O(n_max^2) time and O(n_max) memory.
/// nullopt when p divides the denominator of x; throws std::domain_error
/// when n_max > p - 2 (G_{p-1}(x) is not p-integral).
std::optional<std::vector<u64>> gregory_residue_stream(const Rational& x, u64 n_max, const PrimeCtx& ctx);

/// N_{n,k}(x) = G_n(x) + G_n(x+1) + ... + G_n(x+k-1).
Rational N_nk(unsigned n, unsigned k, const Rational& x);

/// G_n(x) == (-1)^N sum_{j=0}^N (-1)^j binom(N, j) G_{n+N}(x+j), exactly.
bool check_shift_identity(unsigned n, unsigned N, const Rational& x);

}  // namespace finitea
