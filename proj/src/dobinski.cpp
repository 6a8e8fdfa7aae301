#include "finitea/dobinski.hpp"

#include "finitea/parallel.hpp"
#include "finitea/residue.hpp"

#include <chrono>
#include <stdexcept>

namespace finitea {

namespace {

// x * sum_{k<=n} binom(n, k) f(k), the shared recurrence step for f(n + r).
template <class T>
T binomial_transform_step(const std::vector<T>& f, unsigned n, const T& zero) {
    T acc = zero;
    for (unsigned k = 0; k <= n; ++k) acc += f[k] * Rational(binomial(n, k));
    return acc;
}

BigInt pow_int(unsigned base, unsigned e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

Rational pow_rational(const Rational& x, unsigned e) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
    return make_rational(num, den);
}

// Extends the initial values by s(n+1) = sum_k binom(n, k) s(k).
std::vector<BigInt> bell_like(std::vector<BigInt> s, unsigned n_max) {
    s.resize(std::min<std::size_t>(s.size(), n_max + 1));
    for (unsigned n = static_cast<unsigned>(s.size()) - 1; n < n_max; ++n) {
        BigInt acc = 0;
        for (unsigned k = 0; k <= n; ++k) acc += binomial(n, k) * s[k];
        s.push_back(acc);
    }
    return s;
}

}  // namespace

std::vector<BigInt> bell(unsigned n_max) { return bell_like({1}, n_max); }

std::vector<BigInt> g_seq(unsigned n_max) { return bell_like({0, 1}, n_max); }

CoeffFamily coeff_family(unsigned r, unsigned n_max) {
    if (r == 0) throw std::invalid_argument("coeff_family: r must be positive");
    CoeffFamily fam;
    fam.r = r;
    fam.n_max = n_max;
    const auto x = RationalPolynomial::x();
    const RationalPolynomial zero;

    fam.b.assign(r, {});
    for (unsigned j = 0; j < r; ++j) {
        auto& col = fam.b[j];
        for (unsigned n = 0; n <= n_max; ++n) {
            if (n < r)
                col.push_back(RationalPolynomial(Rational(j == n ? 1 : 0)));
            else
                col.push_back(x * binomial_transform_step(col, n - r, zero));
        }
    }

    const Rational sign = r % 2 == 1 ? 1 : -1;  // (-1)^{r-1}
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n < r)
            fam.g.push_back(zero);
        else if (n == r)
            fam.g.push_back(x * sign);
        else
            fam.g.push_back(x * binomial_transform_step(fam.g, n - r, zero));
    }
    return fam;
}

Rational partial_sum_exact(unsigned r, unsigned n, unsigned N, const Rational& x) {
    if (r == 0 || N == 0) throw std::invalid_argument("partial_sum_exact: need r >= 1 and N >= 1");
    Rational sum = 0;
    Rational weight = 1;  // x^k / (k!)^r
    for (unsigned k = 0; k < N; ++k) {
        if (k > 0) weight = weight * x / Rational(pow_int(k, r));
        const BigInt kn = (k == 0) ? BigInt(n == 0 ? 1 : 0) : pow_int(k, n);
        sum += weight * Rational(kn);
    }
    return sum;
}

bool check_truncation_identity(unsigned r, unsigned n, unsigned N, const Rational& x) {
    const Rational lhs = partial_sum_exact(r, n + r, N, x);
    Rational rhs = 0;
    for (unsigned k = 0; k <= n; ++k) rhs += Rational(binomial(n, k)) * partial_sum_exact(r, k, N, x);
    rhs *= x;
    BigInt fact_pow;
    const BigInt f = factorial(N - 1);
    mpz_pow_ui(fact_pow.get_mpz_t(), f.get_mpz_t(), r);
    rhs -= Rational(pow_int(N, n)) * pow_rational(x, N) / Rational(fact_pow);
    return lhs == rhs;
}

std::optional<std::vector<u64>> dobinski_residues(unsigned r, unsigned n_max, const Rational& x, const PrimeCtx& ctx) {
    const u64 p = ctx.p();
    auto xr = rational_mod(x, p);
    if (!xr) return std::nullopt;
    auto inv = ctx.inverses();
    std::vector<u64> sums(n_max + 1, 0);
    sums[0] = 1 % p;  // k = 0 contributes only through 0^0
    u64 weight = 1 % p;
    for (u64 k = 1; k < p; ++k) {
        // weight = x^k / (k!)^r
        weight = ctx.mul(ctx.mul(weight, *xr), ctx.pow(inv[k], r));
        u64 term = weight;
        for (unsigned n = 0; n <= n_max; ++n) {
            sums[n] = ctx.add(sums[n], term);
            term = ctx.mul(term, k);
        }
    }
    return sums;
}

AElement d_r_A(unsigned r, unsigned n, const Rational& x, const std::vector<u64>& window) {
    return AElement::build(window, [&](u64 p) -> AElement::Component {
        auto sums = dobinski_residues(r, n, x, PrimeCtx(p));
        if (!sums) return std::nullopt;
        return (*sums)[n];
    });
}

AElement e_A(const std::vector<u64>& window) { return d_r_A(1, 0, Rational(1), window); }

VerificationReport verify_dobinski(unsigned r, unsigned n_max, const Rational& x, const std::vector<u64>& window,
                                   unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    const CoeffFamily fam = coeff_family(r, n_max);

    // The coefficients are evaluated once, exactly; their denominators decide skips.
    std::vector<std::vector<Rational>> b_at(r, std::vector<Rational>(n_max + 1));
    std::vector<Rational> g_at(n_max + 1);
    std::vector<const Rational*> all_coeffs;
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned j = 0; j < r; ++j) {
            b_at[j][n] = fam.b[j][n](x);
            all_coeffs.push_back(&b_at[j][n]);
        }
        g_at[n] = fam.g[n](x);
        all_coeffs.push_back(&g_at[n]);
    }

    struct PrimeResult {
        std::vector<CheckRecord> records;
        std::optional<SkippedPrime> skipped;
    };

    auto per_prime = [&](u64 p) {
        PrimeResult out;
        if (mpz_divisible_ui_p(x.get_den_mpz_t(), p)) {
            out.skipped = SkippedPrime{p, "p divides the denominator of x"};
            return out;
        }
        for (const Rational* c : all_coeffs)
            if (mpz_divisible_ui_p(c->get_den_mpz_t(), p)) {
                out.skipped = SkippedPrime{p, "p divides a denominator of b_{r,j}(n;x) or g_r(n;x)"};
                return out;
            }
        PrimeCtx ctx(p);
        const auto d = *dobinski_residues(r, n_max, x, ctx);
        for (unsigned n = 0; n <= n_max; ++n) {
            u64 rhs = *rational_mod(g_at[n], p);
            for (unsigned j = 0; j < r; ++j) rhs = ctx.add(rhs, ctx.mul(*rational_mod(b_at[j][n], p), d[j]));
            out.records.push_back({p, static_cast<i64>(n), "n=" + std::to_string(n), d[n], rhs, d[n] == rhs});
        }
        return out;
    };

    const auto results = parallel_map_primes(window, threads, per_prime);

    VerificationReport report;
    report.theorem = "dobinski";
    report.parameters = {{"r", std::to_string(r)}, {"nmax", std::to_string(n_max)}, {"x", to_string(x)}};
    report.window_lo = window.empty() ? 0 : window.front();
    report.window_hi = window.empty() ? 0 : window.back();
    for (const auto& res : results) {
        report.records.insert(report.records.end(), res.records.begin(), res.records.end());
        if (res.skipped) report.skipped.push_back(*res.skipped);
    }
    report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::optional<Rational> dobinski_tail_bound(unsigned r, unsigned n, const Rational& x, unsigned N) {
    if (N == 0) return std::nullopt;
    const Rational ax = abs(x);
    // t_k = k^n |x|^k / (k!)^r; t_{k+1}/t_k = ((k+1)/k)^n |x| / (k+1)^r decreases in k.
    const Rational ratio = pow_rational(Rational(N + 1, N), n) * ax / Rational(pow_int(N + 1, r));
    if (ratio >= 1) return std::nullopt;
    BigInt fact_pow;
    const BigInt f = factorial(N);
    mpz_pow_ui(fact_pow.get_mpz_t(), f.get_mpz_t(), r);
    const Rational t_N = Rational(pow_int(N, n)) * pow_rational(ax, N) / Rational(fact_pow);
    return t_N / (1 - ratio);
}

bool numeric_identity_check(unsigned r, unsigned n, const Rational& x, unsigned N, const Rational& tolerance) {
    const CoeffFamily fam = coeff_family(r, n);
    std::vector<Rational> b(r);
    for (unsigned j = 0; j < r; ++j) b[j] = fam.b[j][n](x);

    auto tail = dobinski_tail_bound(r, n, x, N);
    if (!tail) throw std::domain_error("numeric_identity_check: series tail bound cannot be met");
    Rational total = *tail;
    for (unsigned j = 0; j < r; ++j) {
        auto tj = dobinski_tail_bound(r, j, x, N);
        if (!tj) throw std::domain_error("numeric_identity_check: series tail bound cannot be met");
        total += abs(b[j]) * *tj;
    }
    if (total >= tolerance / 2) throw std::domain_error("numeric_identity_check: N too small for the tolerance");

    Rational diff = partial_sum_exact(r, n, N, x);
    for (unsigned j = 0; j < r; ++j) diff -= b[j] * partial_sum_exact(r, j, N, x);
    return abs(diff) < tolerance;
}

}  // namespace finitea
