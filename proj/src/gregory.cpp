#include "finitea/gregory.hpp"

#include "finitea/residue.hpp"
#include "finitea/stirling.hpp"

#include <stdexcept>

namespace finitea {

namespace {

// (-1)^i / (i + 1)
Rational log_kernel(unsigned i) { return Rational(i % 2 == 0 ? 1 : -1, i + 1); }

}  // namespace

std::vector<RationalPolynomial> gregory_polynomials(unsigned n_max) {
    std::vector<RationalPolynomial> g;
    g.reserve(n_max + 1);
    RationalPolynomial binom(Rational(1));
    const auto x = RationalPolynomial::x();
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) binom = binom * (x - Rational(n - 1)) * Rational(1, n);
        RationalPolynomial gn = binom;
        for (unsigned j = 0; j < n; ++j) gn -= g[j] * log_kernel(n - j);
        g.push_back(std::move(gn));
    }
    return g;
}

RationalPolynomial gregory_polynomial(unsigned n) { return gregory_polynomials(n).back(); }

RationalPolynomial gregory_explicit(unsigned n) {
    if (n == 0) throw std::invalid_argument("gregory_explicit: n must be positive");
    const auto s1 = stirling_rows(n).first[n];
    const auto x = RationalPolynomial::x();
    const RationalPolynomial x_plus_1 = x + Rational(1);
    RationalPolynomial sum;
    RationalPolynomial pow_x = x, pow_x1 = x_plus_1;  // x^{j+1}, (x+1)^{j+1}
    for (unsigned j = 1; j <= n; ++j) {
        pow_x = pow_x * x;
        pow_x1 = pow_x1 * x_plus_1;
        sum += (pow_x1 - pow_x) * make_rational(j % 2 == 0 ? BigInt(s1[j]) : BigInt(-s1[j]), BigInt(j + 1));
    }
    return sum * make_rational(n % 2 == 0 ? 1 : -1, factorial(n));
}

RationalPolynomial gregory_integral(unsigned n) {
    const auto antider = RationalPolynomial::binomial(n).antiderivative();
    return antider.shifted(1) - antider;
}

std::vector<Rational> gregory_values(const Rational& x, unsigned n_max) {
    std::vector<Rational> g;
    g.reserve(n_max + 1);
    Rational binom = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) binom = binom * (x - (n - 1)) / n;
        Rational gn = binom;
        for (unsigned j = 0; j < n; ++j) gn -= g[j] * log_kernel(n - j);
        g.push_back(gn);
    }
    return g;
}

std::optional<std::vector<u64>> gregory_residue_stream(const Rational& x, u64 n_max, const PrimeCtx& ctx) {
    const u64 p = ctx.p();
    if (p < 3 || n_max > p - 2) throw std::domain_error("gregory_residue_stream: n_max exceeds p - 2");
    auto xr = rational_mod(x, p);
    if (!xr) return std::nullopt;
    auto inv = ctx.inverses();

    // kernel[i] = (-1)^i / (i+1) mod p
    std::vector<u64> kernel(n_max + 1);
    for (u64 i = 0; i <= n_max; ++i) kernel[i] = i % 2 == 0 ? inv[i + 1] : ctx.neg(inv[i + 1]);

    std::vector<u64> g(n_max + 1);
    u64 binom = 1 % p;
    const bool narrow = p < (u64{1} << 32);
    for (u64 n = 0; n <= n_max; ++n) {
        if (n > 0) binom = ctx.mul(ctx.mul(binom, ctx.sub(*xr, (n - 1) % p)), inv[n]);
        u64 conv;
        if (narrow) {
            // products fit 64 bits; at most p terms of < 2^64 fit 128 bits
            u128 acc = 0;
            for (u64 j = 0; j < n; ++j) acc += g[j] * kernel[n - j];
            conv = static_cast<u64>(acc % p);
        } else {
            conv = 0;
            for (u64 j = 0; j < n; ++j) conv = ctx.add(conv, ctx.mul(g[j], kernel[n - j]));
        }
        g[n] = ctx.sub(binom, conv);
    }
    return g;
}

Rational N_nk(unsigned n, unsigned k, const Rational& x) {
    const auto gn = gregory_polynomial(n);
    Rational sum = 0;
    for (unsigned j = 0; j < k; ++j) sum += gn(x + j);
    return sum;
}

bool check_shift_identity(unsigned n, unsigned N, const Rational& x) {
    const auto g = gregory_polynomials(n + N);
    Rational rhs = 0;
    for (unsigned j = 0; j <= N; ++j) {
        Rational term = Rational(binomial(N, j)) * g[n + N](x + j);
        rhs += (j % 2 == 0) ? term : Rational(-term);
    }
    if (N % 2 == 1) rhs = -rhs;
    return g[n](x) == rhs;
}

}  // namespace finitea
