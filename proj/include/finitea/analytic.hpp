#pragma once

// Real-number evaluation of the Gregory series for Euler's constant and of
// the Dobinski-type sums D_r(n; x), on top of MPFR.

#include "finitea/bigfloat.hpp"
#include "finitea/rational.hpp"

#include <vector>

namespace finitea {

inline constexpr mpfr_prec_t kMinPrecision = 64;
/// Above this index the partial sums take G_n(x) from quadrature.
inline constexpr unsigned kRecurrenceMax = 2048;

/// G_0(x) .. G_{n_max}(x) from the division-free recurrence, checked by
/// recomputation at twice the working precision (agreement to P/2 bits).
/// If they disagree the working precision is doubled, up to three times, before giving up
/// with std::runtime_error("unstable recurrence"). Results carry precision P.
std::vector<BigFloat> gregory_value_float(const Rational& x, unsigned n_max, mpfr_prec_t P);

/// Same values from G_n(x) = int_x^{x+1} binom(u, n) du by Gauss-Legendre
/// quadrature, O(n_max) per node. Same validation contract.
std::vector<BigFloat> gregory_value_integral(const Rational& x, unsigned n_max, mpfr_prec_t P);

/// Recurrence up to kRecurrenceMax, quadrature beyond.
std::vector<BigFloat> gregory_values_auto(const Rational& x, unsigned n_max, mpfr_prec_t P);

/// m! sum_{n=1}^N (-1)^{n-1} G_n(x) / (n)_{m+1} + H_m - log(x + m + 1). Requires x > -1.
BigFloat mascheroni_partial(const Rational& x, unsigned m, unsigned N, mpfr_prec_t P);

/// mascheroni_partial at every N in `checkpoints` (ascending) from one pass.
std::vector<BigFloat> mascheroni_partials(const Rational& x, unsigned m, const std::vector<unsigned>& checkpoints,
                                          mpfr_prec_t P);

/// (1/k) sum_{n=1}^N (-1)^{n-1} N_{n,k}(x) / n - (1/k) sum_{j=1}^k log(x + j),
/// N_{n,k}(x) = sum_{j<k} G_n(x + j). Requires k >= 1, x > -1.
BigFloat bla101_partial(unsigned k, const Rational& x, unsigned N, mpfr_prec_t P);

/// Leading term of G_n(x) for large n:
/// (-1)^{n+1} / (pi n^{x+1} log n) * (sin(pi x) G + (pi cos(pi x) G + sin(pi x) G Psi) / log n),
/// with G = Gamma(x + 1) and Psi = digamma(x + 1).
BigFloat gregory_main_term(const Rational& x, unsigned n, mpfr_prec_t P);

/// G_n(x) divided by gregory_main_term(x, n). Requires x > -1.
BigFloat asymptotic_sanity(const Rational& x, unsigned n, mpfr_prec_t P = 128);

/// sum_{k>=0} k^n x^k / (k!)^r, summed past the peak until the terms drop
/// below 2^{-P-8} relative to max(1, |sum|).
BigFloat d_r_numeric(unsigned r, unsigned n, const Rational& x, mpfr_prec_t P);

/// Euler's constant from the embedded reference digits.
BigFloat euler_gamma_reference(mpfr_prec_t P);

}  // namespace finitea
