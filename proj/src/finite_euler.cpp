#include "finitea/finite_euler.hpp"

#include "finitea/gregory.hpp"
#include "finitea/parallel.hpp"
#include "finitea/residue.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

namespace finitea {

namespace {

struct PrimeResult {
    std::vector<CheckRecord> records;
    std::vector<SkippedPrime> skipped;
};

std::string join_rationals(const std::vector<Rational>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ",") + to_string(x);
    return out;
}

std::string join_unsigned(const std::vector<unsigned>& vs) {
    std::string out;
    for (unsigned v : vs) out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

VerificationReport run_verifier(std::string theorem, std::map<std::string, std::string> parameters,
                                const std::vector<u64>& window, unsigned threads,
                                const std::function<PrimeResult(u64)>& per_prime) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = parallel_map_primes(window, threads, [&](u64 p) {
        if (p < kEulerMinPrime) return PrimeResult{{}, {{p, "p < 5 is excluded from Euler-constant checks"}}};
        return per_prime(p);
    });
    VerificationReport report;
    report.theorem = std::move(theorem);
    report.parameters = std::move(parameters);
    report.window_lo = window.empty() ? 0 : window.front();
    report.window_hi = window.empty() ? 0 : window.back();
    for (const auto& r : results) {
        report.records.insert(report.records.end(), r.records.begin(), r.records.end());
        report.skipped.insert(report.skipped.end(), r.skipped.begin(), r.skipped.end());
    }
    report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// (-1)^{n-1} G_n(x) / n summed over 1 <= n <= p-2.
u64 mascheroni_sum(const std::vector<u64>& g, const PrimeCtx& ctx) {
    const u64 p = ctx.p();
    auto inv = ctx.inverses();
    u64 s = 0;
    for (u64 n = 1; n <= p - 2; ++n) {
        const u64 term = ctx.mul(g[n], inv[n]);
        s = (n % 2 == 1) ? ctx.add(s, term) : ctx.sub(s, term);
    }
    return s;
}

// m! sum_{n=1}^{p-m-1} (-1)^{n-1} G_n(x) / (n)_{m+1}
u64 kluyver_sum(unsigned m, const std::vector<u64>& g, const PrimeCtx& ctx) {
    const u64 p = ctx.p();
    auto inv = ctx.inverses();
    u64 s = 0;
    for (u64 n = 1; n + m + 1 <= p; ++n) {
        u64 inv_rising = 1;
        for (u64 i = 0; i <= m; ++i) inv_rising = ctx.mul(inv_rising, inv[n + i]);
        const u64 term = ctx.mul(g[n], inv_rising);
        s = (n % 2 == 1) ? ctx.add(s, term) : ctx.sub(s, term);
    }
    return ctx.mul(s, ctx.factorials()[m]);
}

// Component of H_m - l_A(x+m+1) added to the Kluyver sum.
std::optional<u64> kluyver_tail(unsigned m, const Rational& x, u64 p) {
    auto h = rational_mod(harmonic(m), p);
    auto l = ell_component(x + m + 1, p);
    if (!h || !l) return std::nullopt;
    return sub_mod(*h, *l, p);
}

std::optional<std::vector<u64>> full_stream(const Rational& x, const PrimeCtx& ctx) {
    return gregory_residue_stream(x, ctx.p() - 2, ctx);
}

std::string x_label(const Rational& x) { return "x=" + to_string(x); }

// Both sides of Eisenstein's congruence at p, or nullopt where undefined.
std::optional<std::pair<u64, u64>> eisenstein_sides(const Rational& x, const PrimeCtx& ctx) {
    const u64 p = ctx.p();
    auto xr = rational_mod(x, p);
    auto r1 = ell_component(x + 1, p);
    auto r0 = ell_component(x, p);
    if (!xr || !r1 || !r0) return std::nullopt;
    auto inv = ctx.inverses();
    u64 lhs = 0, pw = 1;
    for (u64 m = 1; m < p; ++m) {
        pw = ctx.mul(pw, *xr);
        const u64 term = ctx.mul(pw, inv[m]);
        lhs = (m % 2 == 1) ? ctx.add(lhs, term) : ctx.sub(lhs, term);
    }
    return std::pair{lhs, ctx.sub(*r1, *r0)};
}

}  // namespace

std::optional<u64> fermat_quotient(const Rational& x, u64 p) {
    if (p == 2) return std::nullopt;
    auto v = rational_pow_mod_p2(x, p - 1, p);
    if (!v) return std::nullopt;
    // v == 1 (mod p) by Fermat, so (v - 1) / p is exact.
    return ((*v + p * p - 1) % (p * p)) / p;
}

std::optional<u64> ell_component(const Rational& x, u64 p) {
    if (x == 0 || x == 1) return 0;
    auto qp = fermat_quotient(x, p);
    if (!qp) return std::nullopt;
    return mul_mod(*rational_mod(x, p), *qp, p);
}

u64 wilson_quotient(u64 p) {
    require_p2_range(p);
    const u64 m = p * p;
    u64 f = 1 % m;
    for (u64 k = 2; k < p; ++k) f = mul_mod(f, k, m);
    // (p-1)! == -1 (mod p)
    return ((f + 1) % m) / p;
}

std::optional<u64> gamma_M_component(const Rational& x, const PrimeCtx& ctx) {
    auto g = full_stream(x, ctx);
    if (!g) return std::nullopt;
    return mascheroni_sum(*g, ctx);
}

std::optional<u64> gamma_K_component(unsigned m, const Rational& x, const PrimeCtx& ctx) {
    if (m == 0) throw std::invalid_argument("gamma_K: m must be positive");
    if (ctx.p() <= m + 1) return std::nullopt;
    auto g = full_stream(x, ctx);
    auto tail = kluyver_tail(m, x, ctx.p());
    if (!g || !tail) return std::nullopt;
    return ctx.add(kluyver_sum(m, *g, ctx), *tail);
}

std::optional<u64> G_A_component(unsigned k, const Rational& x, const PrimeCtx& ctx) {
    if (k < 2) throw std::invalid_argument("G_A: k must be at least 2");
    if (ctx.p() <= k) return std::nullopt;
    auto g = gregory_residue_stream(x, ctx.p() - k, ctx);
    if (!g) return std::nullopt;
    return g->back();
}

std::optional<u64> L1_component(const Rational& x, const PrimeCtx& ctx) {
    auto y = rational_mod(1 - x, ctx.p());
    if (!y) return std::nullopt;
    auto inv = ctx.inverses();
    u64 s = 0, pw = 1;
    for (u64 n = 1; n < ctx.p(); ++n) {
        pw = ctx.mul(pw, *y);
        s = ctx.add(s, ctx.mul(pw, inv[n]));
    }
    return ctx.neg(s);
}

AElement log_A(const Rational& x, const std::vector<u64>& window) {
    if (x == 0) throw std::domain_error("log_A: x must be nonzero");
    return AElement::build(window, [&](u64 p) { return fermat_quotient(x, p); });
}

AElement ell_A(const Rational& x, const std::vector<u64>& window) {
    return AElement::build(window, [&](u64 p) { return ell_component(x, p); });
}

namespace {

AElement build_parallel(const std::vector<u64>& window, unsigned threads,
                        const std::function<std::optional<u64>(u64)>& f) {
    const auto values = parallel_map_primes(window, threads, f);
    AElement a(window);
    for (std::size_t i = 0; i < window.size(); ++i) a.set(i, values[i]);
    return a;
}

}  // namespace

AElement wilson_gamma(const std::vector<u64>& window, unsigned threads) {
    return build_parallel(window, threads, [](u64 p) -> std::optional<u64> { return wilson_quotient(p); });
}

AElement gamma_M(const Rational& x, const std::vector<u64>& window, unsigned threads) {
    auto a = build_parallel(window, threads, [&](u64 p) -> std::optional<u64> {
        if (p < 3) return std::nullopt;
        return gamma_M_component(x, PrimeCtx(p));
    });
    return a;
}

AElement gamma_K(unsigned m, const Rational& x, const std::vector<u64>& window, unsigned threads) {
    auto a = build_parallel(window, threads, [&](u64 p) { return gamma_K_component(m, x, PrimeCtx(p)); });
    a.raise_bound(m + 1);
    return a;
}

AElement G_A(unsigned k, const Rational& x, const std::vector<u64>& window, unsigned threads) {
    auto a = build_parallel(window, threads, [&](u64 p) { return G_A_component(k, x, PrimeCtx(p)); });
    a.raise_bound(k);
    return a;
}

AElement L1(const Rational& x, const std::vector<u64>& window, unsigned threads) {
    return build_parallel(window, threads, [&](u64 p) { return L1_component(x, PrimeCtx(p)); });
}

std::optional<bool> check_eisenstein(const Rational& x, u64 p) {
    if (p == 2) return std::nullopt;
    auto sides = eisenstein_sides(x, PrimeCtx(p));
    if (!sides) return std::nullopt;
    return sides->first == sides->second;
}

VerificationReport verify_mascheroni(const std::vector<Rational>& xs, const std::vector<u64>& window,
                                     unsigned threads) {
    return run_verifier("mascheroni", {{"x", join_rationals(xs)}}, window, threads, [&](u64 p) {
        PrimeResult out;
        PrimeCtx ctx(p);
        const u64 gw = wilson_quotient(p);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Rational& x = xs[i];
            auto lhs = gamma_M_component(x, ctx);
            if (!lhs) {
                out.skipped.push_back({p, x_label(x) + ": p divides the denominator of x"});
                continue;
            }
            auto l2 = ell_component(x + 2, p);
            auto l1 = ell_component(x + 1, p);
            if (!l2 || !l1) {
                out.skipped.push_back({p, x_label(x) + ": l_A(x+1) or l_A(x+2) undefined"});
                continue;
            }
            u64 rhs = ctx.add(gw, ctx.sub(*l2, *l1));
            rhs = ctx.add(rhs, static_cast<u64>(delta_minus_one(x)));
            rhs = ctx.sub(rhs, 1);
            out.records.push_back({p, static_cast<i64>(i), x_label(x), *lhs, rhs, *lhs == rhs});
        }
        return out;
    });
}

VerificationReport verify_interlude(const std::vector<unsigned>& ks, const std::vector<Rational>& xs,
                                    const std::vector<u64>& window, unsigned threads) {
    for (unsigned k : ks)
        if (k < 2) throw std::invalid_argument("verify_interlude: k must be at least 2");
    return run_verifier(
        "interlude", {{"k", join_unsigned(ks)}, {"x", join_rationals(xs)}}, window, threads, [&](u64 p) {
            PrimeResult out;
            PrimeCtx ctx(p);
            i64 index = 0;
            for (const Rational& x : xs) {
                auto stream = full_stream(x, ctx);
                for (unsigned k : ks) {
                    const std::string label = "k=" + std::to_string(k) + "," + x_label(x);
                    const i64 idx = index++;
                    if (p <= k) {
                        out.skipped.push_back({p, label + ": p <= k"});
                        continue;
                    }
                    if (!stream) {
                        out.skipped.push_back({p, label + ": p divides the denominator of x"});
                        continue;
                    }
                    const u64 lhs = (*stream)[p - k];
                    std::optional<u64> rhs = 0;
                    for (unsigned j = 0; j <= k && rhs; ++j) {
                        auto l = ell_component(x + j + 1, p);
                        if (!l) {
                            rhs.reset();
                            break;
                        }
                        const u64 term = ctx.mul(bigint_mod(binomial(k, j), p), *l);
                        rhs = (j % 2 == 0) ? ctx.add(*rhs, term) : ctx.sub(*rhs, term);
                    }
                    if (!rhs) {
                        out.skipped.push_back({p, label + ": some l_A(x+j+1) undefined"});
                        continue;
                    }
                    if ((k - 1) % 2 == 1) rhs = ctx.neg(*rhs);
                    out.records.push_back({p, idx, label, lhs, *rhs, lhs == *rhs});
                }
            }
            return out;
        });
}

VerificationReport verify_kluyver(const std::vector<unsigned>& ms, const std::vector<Rational>& xs,
                                  const std::vector<u64>& window, unsigned threads) {
    for (unsigned m : ms)
        if (m == 0) throw std::invalid_argument("verify_kluyver: m must be positive");
    return run_verifier(
        "kluyver", {{"m", join_unsigned(ms)}, {"x", join_rationals(xs)}}, window, threads, [&](u64 p) {
            PrimeResult out;
            PrimeCtx ctx(p);
            const u64 gw = wilson_quotient(p);
            i64 index = 0;
            for (const Rational& x : xs) {
                auto stream = full_stream(x, ctx);
                for (unsigned m : ms) {
                    const std::string label = "m=" + std::to_string(m) + "," + x_label(x);
                    const i64 idx = index++;
                    if (p <= m + 1) {
                        out.skipped.push_back({p, label + ": p <= m+1"});
                        continue;
                    }
                    if (!stream) {
                        out.skipped.push_back({p, label + ": p divides the denominator of x"});
                        continue;
                    }
                    auto tail = kluyver_tail(m, x, p);
                    if (!tail) {
                        out.skipped.push_back({p, label + ": l_A(x+m+1) or H_m undefined"});
                        continue;
                    }
                    const u64 lhs = ctx.add(kluyver_sum(m, *stream, ctx), *tail);

                    // Right-hand side from gamma_W and l_A only.
                    std::optional<u64> rhs = ctx.sub(ctx.add(gw, static_cast<u64>(delta_minus_one(x + m))), 1);
                    auto top = ell_component(x + m + 1, p);
                    auto hm1 = rational_mod(harmonic(m) - 1, p);
                    if (!top || !hm1) rhs.reset();
                    if (rhs) rhs = ctx.add(*rhs, ctx.mul(*hm1, *top));
                    for (unsigned j = 0; j < m && rhs; ++j) {
                        auto l = ell_component(x + j + 1, p);
                        Rational coeff = Rational(binomial(m, j)) / (m - j);
                        if ((m - j) % 2 == 1) coeff = -coeff;
                        auto c = rational_mod(coeff, p);
                        if (!l || !c) {
                            rhs.reset();
                            break;
                        }
                        rhs = ctx.add(*rhs, ctx.mul(*c, *l));
                    }
                    if (!rhs) {
                        out.skipped.push_back({p, label + ": some l_A(x+j+1) undefined"});
                        continue;
                    }
                    out.records.push_back({p, idx, label, lhs, *rhs, lhs == *rhs});
                }
            }
            return out;
        });
}

VerificationReport verify_log_additivity(const std::vector<Rational>& xs, const std::vector<u64>& window,
                                         unsigned threads) {
    for (const auto& x : xs)
        if (x == 0) throw std::invalid_argument("verify_log_additivity: x must be nonzero");
    return run_verifier("logadd", {{"x", join_rationals(xs)}}, window, threads, [&](u64 p) {
        PrimeResult out;
        i64 index = 0;
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a; b < xs.size(); ++b) {
                const std::string label = "x=" + to_string(xs[a]) + ",y=" + to_string(xs[b]);
                const i64 idx = index++;
                auto qx = fermat_quotient(xs[a], p);
                auto qy = fermat_quotient(xs[b], p);
                auto qxy = fermat_quotient(xs[a] * xs[b], p);
                if (!qx || !qy || !qxy) {
                    out.skipped.push_back({p, label + ": p divides a numerator or denominator"});
                    continue;
                }
                const u64 rhs = add_mod(*qx, *qy, p);
                out.records.push_back({p, idx, label, *qxy, rhs, *qxy == rhs});
            }
        return out;
    });
}

VerificationReport verify_eisenstein(const std::vector<Rational>& xs, const std::vector<u64>& window,
                                     unsigned threads) {
    return run_verifier("eisenstein", {{"x", join_rationals(xs)}}, window, threads, [&](u64 p) {
        PrimeResult out;
        PrimeCtx ctx(p);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            auto sides = eisenstein_sides(xs[i], ctx);
            if (!sides) {
                out.skipped.push_back({p, x_label(xs[i]) + ": a Fermat quotient is undefined"});
                continue;
            }
            const auto [lhs, rhs] = *sides;
            out.records.push_back({p, static_cast<i64>(i), x_label(xs[i]), lhs, rhs, lhs == rhs});
        }
        return out;
    });
}

VerificationReport verify_L1(const std::vector<Rational>& xs, const std::vector<u64>& window, unsigned threads) {
    return run_verifier("L1", {{"x", join_rationals(xs)}}, window, threads, [&](u64 p) {
        PrimeResult out;
        PrimeCtx ctx(p);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Rational& x = xs[i];
            auto lhs = L1_component(x, ctx);
            auto a = ell_component(x, p);
            auto b = ell_component(x - 1, p);
            if (!lhs || !a || !b) {
                out.skipped.push_back({p, x_label(x) + ": l_A(x) or l_A(x-1) undefined"});
                continue;
            }
            const u64 rhs = ctx.sub(*a, *b);
            out.records.push_back({p, static_cast<i64>(i), x_label(x), *lhs, rhs, *lhs == rhs});
        }
        return out;
    });
}

}  // namespace finitea
