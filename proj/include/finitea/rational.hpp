#pragma once

// Exact rationals. GMP's mpq_class keeps every value in lowest terms with a
// positive denominator, which is the invariant the rest of the library assumes.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace finitea {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "a/b" or "a" with an optional leading sign and no whitespace.
/// Returns nullopt on anything else, including a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Indicator of {-1}, evaluated on the rational itself.
inline int delta_minus_one(const Rational& x) { return x == -1 ? 1 : 0; }

/// H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0.
Rational harmonic(unsigned m);

BigInt factorial(unsigned n);

BigInt binomial(unsigned n, unsigned k);

}  // namespace finitea
