#pragma once

// Dobinski-type sums D_r(n; x) = sum_k k^n x^k / (k!)^r, their truncations,
// the coefficient polynomials b_{r,j}(n; x) and corrections g_r(n; x), and
// the mod-p analogues D_{r,A}(n; x) = (sum_{k<p} k^n x^k/(k!)^r mod p)_p.
//
// Convention: 0^0 = 1, so the k = 0 term contributes 1 exactly when n = 0.

#include "finitea/a_element.hpp"
#include "finitea/polynomial.hpp"
#include "finitea/prime_ctx.hpp"
#include "finitea/rational.hpp"
#include "finitea/report.hpp"

#include <optional>
#include <vector>

namespace finitea {

/// Bell numbers b(0..n_max): b(0) = 1, b(n+1) = sum_k binom(n, k) b(k).
std::vector<BigInt> bell(unsigned n_max);

/// The correction sequence g(0..n_max): g(0) = 0, g(1) = 1, same recurrence for n >= 1.
std::vector<BigInt> g_seq(unsigned n_max);

/// Tables of b_{r,j}(n; x) for 0 <= j < r and g_r(n; x), 0 <= n <= n_max.
struct CoeffFamily {
    unsigned r = 1;
    unsigned n_max = 0;
    std::vector<std::vector<RationalPolynomial>> b;  // b[j][n]
    std::vector<RationalPolynomial> g;               // g[n]
};

/// Initial values b_{r,j}(n) = delta_{jn} for n < r and g_r(n) = (-1)^{r-1} x delta_{nr}
/// for n <= r; then f(n + r) = x sum_{k<=n} binom(n, k) f(k), for n >= 0 (b) and
/// n >= 1 (g).
CoeffFamily coeff_family(unsigned r, unsigned n_max);

/// sum_{k=0}^{N-1} k^n x^k / (k!)^r, exactly.
Rational partial_sum_exact(unsigned r, unsigned n, unsigned N, const Rational& x);

/// D^{(N)}(n + r) == x sum_k binom(n, k) D^{(N)}(k) - N^n x^N / ((N-1)!)^r, exactly.
bool check_truncation_identity(unsigned r, unsigned n, unsigned N, const Rational& x);

/// D_r^{(p)}(n; x) mod p for every 0 <= n <= n_max, in O(p * n_max).
/// nullopt when p divides the denominator of x.
std::optional<std::vector<u64>> dobinski_residues(unsigned r, unsigned n_max, const Rational& x,
                                                   const PrimeCtx& ctx);

/// The A-element D_{r,A}(n; x) over a window of primes.
AElement d_r_A(unsigned r, unsigned n, const Rational& x, const std::vector<u64>& window);

/// e_A = D_{1,A}(0; 1).
AElement e_A(const std::vector<u64>& window);

/// Checks D_{r,A}(n; x) = sum_j b_{r,j}(n; x) D_{r,A}(j; x) + g_r(n; x) at every
/// window prime and 0 <= n <= n_max.
VerificationReport verify_dobinski(unsigned r, unsigned n_max, const Rational& x,
                                   const std::vector<u64>& window, unsigned threads = 1);

/// |D^{(N)}(n) - sum_j b_{r,j}(n) D^{(N)}(j)| < tolerance, evaluated exactly.
/// Throws std::domain_error unless the tail bound of the truncated series is
/// below tolerance / 2.
bool numeric_identity_check(unsigned r, unsigned n, const Rational& x, unsigned N, const Rational& tolerance);

/// A bound on sum_{k >= N} k^n |x|^k / (k!)^r from the ratio test; nullopt if
/// the term ratio at k = N is not below 1.
std::optional<Rational> dobinski_tail_bound(unsigned r, unsigned n, const Rational& x, unsigned N);

}  // namespace finitea
