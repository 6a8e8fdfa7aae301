#include "finitea/residue.hpp"

namespace finitea {

u64 bigint_mod(const BigInt& n, u64 m) {
    static_assert(sizeof(unsigned long) == sizeof(u64));
    return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m));
}

std::optional<u64> rational_mod(const Rational& q, u64 p) {
    u64 den = bigint_mod(q.get_den(), p);
    if (den == 0) return std::nullopt;
    return mul_mod(bigint_mod(q.get_num(), p), inv_mod(den, p), p);
}

std::optional<Residue> rational_mod(const Rational& q, const PrimeCtx& ctx) {
    auto r = rational_mod(q, ctx.p());
    if (!r) return std::nullopt;
    return Residue(*r, ctx.p());
}

void require_p2_range(u64 p) {
    if (p >= (u64{1} << 32)) throw std::domain_error("mod p^2 arithmetic requires p < 2^32");
}

std::optional<u64> rational_pow_mod_p2(const Rational& x, u64 e, u64 p) {
    require_p2_range(p);
    const u64 m = p * p;
    const u64 num = bigint_mod(x.get_num(), m);
    const u64 den = bigint_mod(x.get_den(), m);
    if (num % p == 0 || den % p == 0) return std::nullopt;
    const u64 base = mul_mod(num, inv_mod(den, m), m);
    return pow_mod(base, e, m);
}

std::optional<Residue> binom_rational_mod(const Rational& x, u64 k, const PrimeCtx& ctx) {
    const u64 p = ctx.p();
    if (k >= p) return std::nullopt;
    auto xr = rational_mod(x, p);
    if (!xr) return std::nullopt;
    u64 prod = 1 % p;
    for (u64 i = 0; i < k; ++i) prod = ctx.mul(prod, ctx.sub(*xr, i % p));
    return Residue(ctx.mul(prod, ctx.inverse_factorials()[k]), p);
}

}  // namespace finitea
