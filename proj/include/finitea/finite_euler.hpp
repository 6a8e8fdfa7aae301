#pragma once

// Finite analogues of Euler's constant in the ring A, and the Fermat and
// Wilson quotients they are built from.
//
//   q_p(x)        = (x^{p-1} - 1) / p                        Fermat quotient
//   l_A(x)        = (x q_p(x) mod p)_p, with l_A(0) = 0
//   gamma_W       = (((p-1)! + 1) / p mod p)_p               Wilson quotient
//   gamma_M(x)    = (sum_{n=1}^{p-2} (-1)^{n-1} G_n(x) / n mod p)_p
//   gamma_K,m(x)  = (m! sum_{n=1}^{p-m-1} (-1)^{n-1} G_n(x) / (n)_{m+1} mod p)_p + H_m - l_A(x+m+1)
//   G_A(k; x)     = (G_{p-k}(x) mod p)_p
//   L_1(x)        = (-sum_{n=1}^{p-1} (1-x)^n / n mod p)_p
//
// The "component" functions compute one prime; the A-element builders map
// them over a window. Undefined components are nullopt, never zero.

#include "finitea/a_element.hpp"
#include "finitea/prime_ctx.hpp"
#include "finitea/rational.hpp"
#include "finitea/report.hpp"

#include <optional>
#include <vector>

namespace finitea {

/// Primes below this are excluded from every Euler-constant verifier.
inline constexpr u64 kEulerMinPrime = 5;

/// q_p(x) mod p. nullopt if p = 2 or p divides the numerator or denominator of x.
std::optional<u64> fermat_quotient(const Rational& x, u64 p);

/// x q_p(x) mod p; zero for x in {0, 1}, otherwise undefined where q_p(x) is.
std::optional<u64> ell_component(const Rational& x, u64 p);

/// ((p-1)! + 1) / p mod p, by one O(p) pass mod p^2.
u64 wilson_quotient(u64 p);

std::optional<u64> gamma_M_component(const Rational& x, const PrimeCtx& ctx);
/// Needs m >= 1 and p > m + 1.
std::optional<u64> gamma_K_component(unsigned m, const Rational& x, const PrimeCtx& ctx);
/// Needs k >= 2 and p > k.
std::optional<u64> G_A_component(unsigned k, const Rational& x, const PrimeCtx& ctx);
std::optional<u64> L1_component(const Rational& x, const PrimeCtx& ctx);

AElement log_A(const Rational& x, const std::vector<u64>& window);
AElement ell_A(const Rational& x, const std::vector<u64>& window);
AElement wilson_gamma(const std::vector<u64>& window, unsigned threads = 1);
AElement gamma_M(const Rational& x, const std::vector<u64>& window, unsigned threads = 1);
AElement gamma_K(unsigned m, const Rational& x, const std::vector<u64>& window, unsigned threads = 1);
AElement G_A(unsigned k, const Rational& x, const std::vector<u64>& window, unsigned threads = 1);
AElement L1(const Rational& x, const std::vector<u64>& window, unsigned threads = 1);

/// sum_{m=1}^{p-1} (-1)^{m-1} x^m / m == (x+1) q_p(x+1) - x q_p(x) (mod p).
/// nullopt when either side is undefined at p.
std::optional<bool> check_eisenstein(const Rational& x, u64 p);

/// gamma_M(x) = gamma_W + l_A(x+2) - l_A(x+1) + delta_{-1}(x) - 1.
VerificationReport verify_mascheroni(const std::vector<Rational>& xs, const std::vector<u64>& window,
                                     unsigned threads = 1);
/// G_A(k; x) = (-1)^{k-1} sum_{j=0}^k (-1)^j binom(k, j) l_A(x+j+1).
VerificationReport verify_interlude(const std::vector<unsigned>& ks, const std::vector<Rational>& xs,
                                    const std::vector<u64>& window, unsigned threads = 1);
/// gamma_K,m(x) = gamma_W + delta_{-1}(x+m) - 1 + (H_m - 1) l_A(x+m+1)
///                + sum_{j<m} (-1)^{m-j} binom(m, j) l_A(x+j+1) / (m-j).
VerificationReport verify_kluyver(const std::vector<unsigned>& ms, const std::vector<Rational>& xs,
                                  const std::vector<u64>& window, unsigned threads = 1);
/// q_p(xy) == q_p(x) + q_p(y) for every pair drawn from xs (including x = y).
VerificationReport verify_log_additivity(const std::vector<Rational>& xs, const std::vector<u64>& window,
                                         unsigned threads = 1);
VerificationReport verify_eisenstein(const std::vector<Rational>& xs, const std::vector<u64>& window,
                                     unsigned threads = 1);
/// L_1(x) = l_A(x) - l_A(x-1).
VerificationReport verify_L1(const std::vector<Rational>& xs, const std::vector<u64>& window, unsigned threads = 1);

}  // namespace finitea
