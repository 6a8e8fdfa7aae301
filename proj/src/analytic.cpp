#include "finitea/analytic.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace finitea {

namespace {

using Evaluator = std::function<std::vector<BigFloat>(const Rational&, unsigned, mpfr_prec_t)>;

void require_precision(mpfr_prec_t P) {
    if (P < kMinPrecision) throw std::invalid_argument("precision must be at least 64 bits");
}

void require_above_minus_one(const Rational& x) {
    if (x <= -1) throw std::domain_error("x must exceed -1");
}

// Raw recurrence G_n = binom(x, n) - sum_{i=1}^n (-1)^i / (i + 1) * G_{n-i} at precision W.
std::vector<BigFloat> gregory_recurrence_raw(const Rational& x, unsigned n_max, mpfr_prec_t W) {
    std::vector<BigFloat> neg_kernel;
    neg_kernel.reserve(n_max + 1);
    neg_kernel.emplace_back(W);
    for (unsigned i = 1; i <= n_max; ++i) {
        BigFloat c(1, W);
        mpfr_div_ui(c.get(), c.get(), i + 1, MPFR_RNDN);
        if (i % 2 == 1) mpfr_neg(c.get(), c.get(), MPFR_RNDN);
        mpfr_neg(c.get(), c.get(), MPFR_RNDN);
        neg_kernel.push_back(std::move(c));
    }

    const BigFloat xf(x, W);
    std::vector<BigFloat> G;
    G.reserve(n_max + 1);
    G.emplace_back(1, W);
    BigFloat binom(1, W), step(W);
    for (unsigned n = 1; n <= n_max; ++n) {
        mpfr_sub_ui(step.get(), xf.get(), n - 1, MPFR_RNDN);
        mpfr_mul(binom.get(), binom.get(), step.get(), MPFR_RNDN);
        mpfr_div_ui(binom.get(), binom.get(), n, MPFR_RNDN);
        BigFloat acc = binom;
        for (unsigned i = 1; i <= n; ++i)
            mpfr_fma(acc.get(), neg_kernel[i].get(), G[n - i].get(), acc.get(), MPFR_RNDN);
        G.push_back(std::move(acc));
    }
    return G;
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void legendre_nodes(unsigned K, mpfr_prec_t W, std::vector<BigFloat>& nodes, std::vector<BigFloat>& weights) {
    nodes.assign(K, BigFloat(W));
    weights.assign(K, BigFloat(W));
    BigFloat z(W), p0(W), p1(W), p2(W), dp(W), t(W), delta(W), pi(W);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    const BigFloat tol = pow2(-static_cast<long>(W) + 4, W);

    auto eval = [&] {
        mpfr_set_ui(p0.get(), 1, MPFR_RNDN);
        mpfr_set(p1.get(), z.get(), MPFR_RNDN);
        for (unsigned j = 2; j <= K; ++j) {
            // j P_j = (2j - 1) z P_{j-1} - (j - 1) P_{j-2}
            mpfr_mul(t.get(), z.get(), p1.get(), MPFR_RNDN);
            mpfr_mul_ui(t.get(), t.get(), 2 * j - 1, MPFR_RNDN);
            mpfr_mul_ui(p2.get(), p0.get(), j - 1, MPFR_RNDN);
            mpfr_sub(p2.get(), t.get(), p2.get(), MPFR_RNDN);
            mpfr_div_ui(p2.get(), p2.get(), j, MPFR_RNDN);
            mpfr_swap(p0.get(), p1.get());
            mpfr_swap(p1.get(), p2.get());
        }
        // P_K'(z) = K (z P_K - P_{K-1}) / (z^2 - 1)
        mpfr_mul(dp.get(), z.get(), p1.get(), MPFR_RNDN);
        mpfr_sub(dp.get(), dp.get(), p0.get(), MPFR_RNDN);
        mpfr_mul_ui(dp.get(), dp.get(), K, MPFR_RNDN);
        mpfr_sqr(t.get(), z.get(), MPFR_RNDN);
        mpfr_sub_ui(t.get(), t.get(), 1, MPFR_RNDN);
        mpfr_div(dp.get(), dp.get(), t.get(), MPFR_RNDN);
    };

    const unsigned half = (K + 1) / 2;
    for (unsigned i = 0; i < half; ++i) {
        mpfr_set_d(z.get(), std::cos(M_PI * (i + 0.75) / (K + 0.5)), MPFR_RNDN);
        for (int iter = 0; iter < 200; ++iter) {
            eval();
            mpfr_div(delta.get(), p1.get(), dp.get(), MPFR_RNDN);
            mpfr_sub(z.get(), z.get(), delta.get(), MPFR_RNDN);
            mpfr_abs(delta.get(), delta.get(), MPFR_RNDN);
            if (mpfr_lessequal_p(delta.get(), tol.get())) break;
        }
        eval();
        // w = 2 / ((1 - z^2) P_K'(z)^2)
        BigFloat w(W);
        mpfr_sqr(t.get(), z.get(), MPFR_RNDN);
        mpfr_ui_sub(t.get(), 1, t.get(), MPFR_RNDN);
        mpfr_sqr(w.get(), dp.get(), MPFR_RNDN);
        mpfr_mul(w.get(), w.get(), t.get(), MPFR_RNDN);
        mpfr_ui_div(w.get(), 2, w.get(), MPFR_RNDN);
        nodes[i] = z;
        weights[i] = w;
        nodes[K - 1 - i] = -z;
        weights[K - 1 - i] = w;
    }
}

unsigned node_count(mpfr_prec_t W) { return static_cast<unsigned>(W / 3 + 16); }

std::vector<BigFloat> gregory_integral_raw(const Rational& x, unsigned n_max, mpfr_prec_t W) {
    const unsigned K = node_count(W);
    std::vector<BigFloat> nodes, weights;
    legendre_nodes(K, W, nodes, weights);

    // u_i = x + (1 + z_i) / 2, weight w_i / 2.
    const BigFloat xf(x, W);
    std::vector<BigFloat> binom(K, BigFloat(W));
    std::vector<BigFloat> u(K, BigFloat(W));
    for (unsigned i = 0; i < K; ++i) {
        mpfr_add_ui(u[i].get(), nodes[i].get(), 1, MPFR_RNDN);
        mpfr_div_2ui(u[i].get(), u[i].get(), 1, MPFR_RNDN);
        mpfr_add(u[i].get(), u[i].get(), xf.get(), MPFR_RNDN);
        mpfr_div_2ui(weights[i].get(), weights[i].get(), 1, MPFR_RNDN);
        mpfr_set_ui(binom[i].get(), 1, MPFR_RNDN);
    }

    std::vector<BigFloat> G;
    G.reserve(n_max + 1);
    G.emplace_back(1, W);
    BigFloat step(W), acc(W);
    for (unsigned n = 1; n <= n_max; ++n) {
        mpfr_set_zero(acc.get(), 1);
        for (unsigned i = 0; i < K; ++i) {
            mpfr_sub_ui(step.get(), u[i].get(), n - 1, MPFR_RNDN);
            mpfr_mul(binom[i].get(), binom[i].get(), step.get(), MPFR_RNDN);
            mpfr_div_ui(binom[i].get(), binom[i].get(), n, MPFR_RNDN);
            mpfr_fma(acc.get(), weights[i].get(), binom[i].get(), acc.get(), MPFR_RNDN);
        }
        G.push_back(acc);
    }
    return G;
}

// Agreement to P/2 bits: |a - b| <= 2^{-P/2} |b| + 2^{-P}.
bool agree(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b, mpfr_prec_t P) {
    const mpfr_prec_t W = b.front().precision();
    BigFloat diff(W), bound(W);
    const BigFloat rel = pow2(-static_cast<long>(P / 2), W);
    const BigFloat floor = pow2(-static_cast<long>(P), W);
    for (std::size_t n = 0; n < a.size(); ++n) {
        mpfr_sub(diff.get(), a[n].get(), b[n].get(), MPFR_RNDN);
        mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
        mpfr_abs(bound.get(), b[n].get(), MPFR_RNDN);
        mpfr_mul(bound.get(), bound.get(), rel.get(), MPFR_RNDN);
        mpfr_add(bound.get(), bound.get(), floor.get(), MPFR_RNDN);
        if (mpfr_greater_p(diff.get(), bound.get())) return false;
    }
    return true;
}

std::vector<BigFloat> validated(const Rational& x, unsigned n_max, mpfr_prec_t P,
                                std::vector<BigFloat> (*raw)(const Rational&, unsigned, mpfr_prec_t)) {
    require_precision(P);
    mpfr_prec_t W = P;
    std::vector<BigFloat> lo = raw(x, n_max, W);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<BigFloat> hi = raw(x, n_max, 2 * W);
        if (agree(lo, hi, P)) {
            std::vector<BigFloat> out;
            out.reserve(hi.size());
            for (const auto& v : hi) {
                BigFloat r(P);
                mpfr_set(r.get(), v.get(), MPFR_RNDN);
                out.push_back(std::move(r));
            }
            return out;
        }
        lo = std::move(hi);
        W *= 2;
    }
    throw std::runtime_error("unstable recurrence");
}

BigFloat log_rational(const Rational& q, mpfr_prec_t P) {
    BigFloat v(q, P);
    mpfr_log(v.get(), v.get(), MPFR_RNDN);
    return v;
}

// sum_{n=1}^{N} (-1)^{n-1} values[n] / divisor(n), recorded at each checkpoint.
std::vector<BigFloat> alternating_sums(const std::vector<BigFloat>& values, const std::vector<unsigned>& checkpoints,
                                       const std::function<void(mpfr_ptr, unsigned)>& divide, mpfr_prec_t P) {
    std::vector<BigFloat> out;
    BigFloat sum(P), term(P);
    std::size_t next = 0;
    const unsigned N = checkpoints.empty() ? 0 : checkpoints.back();
    for (unsigned n = 1; n <= N; ++n) {
        mpfr_set(term.get(), values[n].get(), MPFR_RNDN);
        divide(term.get(), n);
        if (n % 2 == 1)
            mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        else
            mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        while (next < checkpoints.size() && checkpoints[next] == n) {
            out.push_back(sum);
            ++next;
        }
    }
    while (next < checkpoints.size()) {
        out.push_back(sum);
        ++next;
    }
    return out;
}

void check_ascending(const std::vector<unsigned>& checkpoints) {
    for (std::size_t i = 1; i < checkpoints.size(); ++i)
        if (checkpoints[i] < checkpoints[i - 1]) throw std::invalid_argument("checkpoints must be ascending");
}

}  // namespace

std::vector<BigFloat> gregory_value_float(const Rational& x, unsigned n_max, mpfr_prec_t P) {
    return validated(x, n_max, P, gregory_recurrence_raw);
}

std::vector<BigFloat> gregory_value_integral(const Rational& x, unsigned n_max, mpfr_prec_t P) {
    return validated(x, n_max, P, gregory_integral_raw);
}

std::vector<BigFloat> gregory_values_auto(const Rational& x, unsigned n_max, mpfr_prec_t P) {
    return n_max <= kRecurrenceMax ? gregory_value_float(x, n_max, P) : gregory_value_integral(x, n_max, P);
}

std::vector<BigFloat> mascheroni_partials(const Rational& x, unsigned m, const std::vector<unsigned>& checkpoints,
                                          mpfr_prec_t P) {
    require_above_minus_one(x);
    require_precision(P);
    check_ascending(checkpoints);
    const unsigned N = checkpoints.empty() ? 0 : checkpoints.back();
    const auto G = gregory_values_auto(x, N, P);

    BigInt rising;
    auto divide = [&](mpfr_ptr t, unsigned n) {
        rising = 1;
        for (unsigned j = 0; j <= m; ++j) rising *= n + j;
        mpfr_div_z(t, t, rising.get_mpz_t(), MPFR_RNDN);
    };
    auto sums = alternating_sums(G, checkpoints, divide, P);

    const BigFloat correction = log_rational(x + m + 1, P);
    BigFloat harmonic_m(harmonic(m), P);
    for (auto& s : sums) {
        if (m > 0) {
            mpfr_mul_z(s.get(), s.get(), factorial(m).get_mpz_t(), MPFR_RNDN);
            mpfr_add(s.get(), s.get(), harmonic_m.get(), MPFR_RNDN);
        }
        mpfr_sub(s.get(), s.get(), correction.get(), MPFR_RNDN);
    }
    return sums;
}

BigFloat mascheroni_partial(const Rational& x, unsigned m, unsigned N, mpfr_prec_t P) {
    return std::move(mascheroni_partials(x, m, {N}, P).front());
}

BigFloat bla101_partial(unsigned k, const Rational& x, unsigned N, mpfr_prec_t P) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    require_above_minus_one(x);
    require_precision(P);

    // N_{n,k}(x) = sum_{j<k} G_n(x + j), shifting with G_n(y + 1) = G_n(y) + G_{n-1}(y).
    auto shifted = gregory_values_auto(x, N, P);
    std::vector<BigFloat> total = shifted;
    for (unsigned j = 1; j < k; ++j) {
        for (unsigned n = N; n >= 1; --n)
            mpfr_add(shifted[n].get(), shifted[n].get(), shifted[n - 1].get(), MPFR_RNDN);
        for (unsigned n = 0; n <= N; ++n) mpfr_add(total[n].get(), total[n].get(), shifted[n].get(), MPFR_RNDN);
    }

    auto divide = [](mpfr_ptr t, unsigned n) { mpfr_div_ui(t, t, n, MPFR_RNDN); };
    BigFloat sum = std::move(alternating_sums(total, {N}, divide, P).front());

    Rational product = 1;
    for (unsigned j = 1; j <= k; ++j) product *= x + j;
    const BigFloat logs = log_rational(product, P);
    if (k > 1) {
        mpfr_sub(sum.get(), sum.get(), logs.get(), MPFR_RNDN);
        mpfr_div_ui(sum.get(), sum.get(), k, MPFR_RNDN);
    } else {
        mpfr_sub(sum.get(), sum.get(), logs.get(), MPFR_RNDN);
    }
    return sum;
}

BigFloat gregory_main_term(const Rational& x, unsigned n, mpfr_prec_t P) {
    require_above_minus_one(x);
    const BigFloat xf(x, P);
    BigFloat pi(P), pix(P), s(P), c(P), gam(P), psi(P), x1(P), logn(P), t(P), u(P);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_mul(pix.get(), pi.get(), xf.get(), MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), pix.get(), MPFR_RNDN);
    mpfr_add_ui(x1.get(), xf.get(), 1, MPFR_RNDN);
    mpfr_gamma(gam.get(), x1.get(), MPFR_RNDN);
    mpfr_digamma(psi.get(), x1.get(), MPFR_RNDN);
    mpfr_set_ui(logn.get(), n, MPFR_RNDN);
    mpfr_log(logn.get(), logn.get(), MPFR_RNDN);

    // inner = sin G + (pi cos G + sin G Psi) / log n
    mpfr_mul(t.get(), pi.get(), c.get(), MPFR_RNDN);
    mpfr_mul(u.get(), s.get(), psi.get(), MPFR_RNDN);
    mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), gam.get(), MPFR_RNDN);
    mpfr_div(t.get(), t.get(), logn.get(), MPFR_RNDN);
    mpfr_mul(u.get(), s.get(), gam.get(), MPFR_RNDN);
    mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDN);

    // / (pi n^{x+1} log n)
    BigFloat scale(P);
    mpfr_set_ui(scale.get(), n, MPFR_RNDN);
    mpfr_pow(scale.get(), scale.get(), x1.get(), MPFR_RNDN);
    mpfr_mul(scale.get(), scale.get(), pi.get(), MPFR_RNDN);
    mpfr_mul(scale.get(), scale.get(), logn.get(), MPFR_RNDN);
    mpfr_div(t.get(), t.get(), scale.get(), MPFR_RNDN);
    if (n % 2 == 0) mpfr_neg(t.get(), t.get(), MPFR_RNDN);
    return t;
}

BigFloat asymptotic_sanity(const Rational& x, unsigned n, mpfr_prec_t P) {
    require_above_minus_one(x);
    const auto G = gregory_values_auto(x, n, P);
    return G[n] / gregory_main_term(x, n, P);
}

BigFloat d_r_numeric(unsigned r, unsigned n, const Rational& x, mpfr_prec_t P) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    const mpfr_prec_t W = P + 32;
    const BigFloat xf(x, W);
    const double xd = std::fabs(x.get_d());

    BigFloat sum(W), weight(1, W), power(W), term(W), absterm(W), scale(W);
    // k = 0 contributes 0^n, which is 1 only for n = 0.
    if (n == 0) mpfr_set_ui(sum.get(), 1, MPFR_RNDN);
    for (unsigned long k = 1;; ++k) {
        // weight = x^k / (k!)^r
        mpfr_mul(weight.get(), weight.get(), xf.get(), MPFR_RNDN);
        for (unsigned i = 0; i < r; ++i) mpfr_div_ui(weight.get(), weight.get(), k, MPFR_RNDN);
        mpfr_ui_pow_ui(power.get(), k, n, MPFR_RNDN);
        mpfr_mul(term.get(), weight.get(), power.get(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);

        const double ratio = xd * std::pow(1.0 + 1.0 / k, n) / std::pow(k + 1.0, r);
        if (ratio >= 0.5) continue;
        mpfr_abs(absterm.get(), term.get(), MPFR_RNDN);
        mpfr_abs(scale.get(), sum.get(), MPFR_RNDN);
        if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
        mpfr_mul_2si(scale.get(), scale.get(), -static_cast<long>(P) - 8, MPFR_RNDN);
        if (mpfr_less_p(absterm.get(), scale.get())) break;
    }
    BigFloat out(P);
    mpfr_set(out.get(), sum.get(), MPFR_RNDN);
    return out;
}

BigFloat euler_gamma_reference(mpfr_prec_t P) { return BigFloat::parse(kEulerGammaDigits, P); }

}  // namespace finitea
