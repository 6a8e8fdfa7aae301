#pragma once

#include "finitea/modular.hpp"
#include "finitea/prime_ctx.hpp"
#include "finitea/rational.hpp"

#include <compare>
#include <optional>
#include <stdexcept>

namespace finitea {

/// An element of Z/pZ tagged with its modulus. Mixing moduli throws.
class Residue {
public:
    Residue(u64 value, u64 p) : value_(value % p), p_(p) {}

    u64 value() const { return value_; }
    u64 modulus() const { return p_; }

    friend Residue operator+(Residue a, Residue b) { return {add_mod(a.value_, b.value_, same(a, b)), a.p_}; }
    friend Residue operator-(Residue a, Residue b) { return {sub_mod(a.value_, b.value_, same(a, b)), a.p_}; }
    friend Residue operator*(Residue a, Residue b) { return {mul_mod(a.value_, b.value_, same(a, b)), a.p_}; }
    Residue operator-() const { return {neg_mod(value_, p_), p_}; }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    static u64 same(const Residue& a, const Residue& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("Residue: moduli differ");
        return a.p_;
    }

    u64 value_;
    u64 p_;
};

/// n mod m for an arbitrary-size integer, in [0, m).
u64 bigint_mod(const BigInt& n, u64 m);

/// q mod p, or nullopt when p divides the denominator.
std::optional<u64> rational_mod(const Rational& q, u64 p);
std::optional<Residue> rational_mod(const Rational& q, const PrimeCtx& ctx);

/// x^e mod p^2. Requires p < 2^32 and p dividing neither numerator nor
/// denominator of x; otherwise nullopt.
std::optional<u64> rational_pow_mod_p2(const Rational& x, u64 e, u64 p);

/// binom(x, k) = x(x-1)...(x-k+1)/k! mod p. Needs k < p and p not dividing
/// the denominator of x.
std::optional<Residue> binom_rational_mod(const Rational& x, u64 k, const PrimeCtx& ctx);

/// Throws unless p^2 fits a machine word.
void require_p2_range(u64 p);

}  // namespace finitea
