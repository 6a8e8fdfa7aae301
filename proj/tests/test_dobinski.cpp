#include "doctest.h"

#include "finitea/dobinski.hpp"
#include "finitea/primes.hpp"
#include "finitea/residue.hpp"
#include "finitea/stirling.hpp"

using namespace finitea;

namespace {

Rational q(long n, unsigned long d = 1) { return make_rational(n, d); }

std::vector<BigInt> ints(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// sum_{k<p} k^n x^k / (k!)^r mod p with every factor recomputed from scratch.
u64 brute_dobinski(unsigned r, unsigned n, const Rational& x, u64 p) {
    Rational sum = 0;
    for (u64 k = 0; k < p; ++k) {
        BigInt kn = (k == 0) ? BigInt(n == 0 ? 1 : 0) : BigInt(1);
        for (unsigned i = 0; k > 0 && i < n; ++i) kn *= static_cast<unsigned long>(k);
        BigInt fr = 1;
        for (unsigned i = 0; i < r; ++i) fr *= factorial(static_cast<unsigned>(k));
        Rational xk = 1;
        for (u64 i = 0; i < k; ++i) xk *= x;
        sum += Rational(kn) * xk / Rational(fr);
    }
    // k! for k < p is a unit, so only x's denominator can make this undefined
    return *rational_mod(sum, p);
}

}  // namespace

TEST_CASE("Bell and correction sequences") {
    CHECK(bell(7) == ints({1, 1, 2, 5, 15, 52, 203, 877}));
    CHECK(g_seq(7) == ints({0, 1, 1, 3, 9, 31, 121, 523}));
    CHECK(bell(0) == ints({1}));
    CHECK(g_seq(0) == ints({0}));

    const auto fam = coeff_family(1, 15);
    const auto b = bell(15);
    for (unsigned n = 0; n <= 15; ++n) CHECK(fam.b[0][n](q(1)) == Rational(b[n]));
    const auto g = g_seq(15);
    for (unsigned n = 0; n <= 15; ++n) CHECK(fam.g[n](q(1)) == Rational(g[n]));
}

TEST_CASE("coefficient family tables") {
    const auto fam = coeff_family(2, 8);
    const auto b0 = ints({1, 0, 1, 1, 2, 5, 13, 36, 109});
    const auto b1 = ints({0, 1, 0, 1, 2, 4, 10, 29, 90});
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(fam.b[0][n](q(1)) == Rational(b0[n]));
        CHECK(fam.b[1][n](q(1)) == Rational(b1[n]));
    }
    CHECK(coeff_family(1, 3).b[0][3] == RationalPolynomial(std::vector<Rational>{0, 1, 3, 1}));
    CHECK_THROWS(coeff_family(0, 3));
}

TEST_CASE("coefficient family invariants") {
    SUBCASE("recurrence holds, checked pointwise at several x") {
        for (unsigned r = 1; r <= 4; ++r) {
            const auto fam = coeff_family(r, 25 + r);
            for (const auto& x : {q(1), q(1, 3), q(-2), q(7, 3)}) {
                auto check = [&](auto value_at) {
                    for (unsigned n = 0; n <= 25; ++n) {
                        Rational acc = 0;
                        for (unsigned k = 0; k <= n; ++k) acc += Rational(binomial(n, k)) * value_at(k);
                        REQUIRE(value_at(n + r) == x * acc);
                    }
                };
                for (unsigned j = 0; j < r; ++j) check([&](unsigned n) { return fam.b[j][n](x); });
                // g follows the recurrence from n = 1 on
                for (unsigned n = 1; n <= 25; ++n) {
                    Rational acc = 0;
                    for (unsigned k = 0; k <= n; ++k) acc += Rational(binomial(n, k)) * fam.g[k](x);
                    REQUIRE(fam.g[n + r](x) == x * acc);
                }
            }
        }
    }
    SUBCASE("initial windows") {
        for (unsigned r = 1; r <= 5; ++r) {
            const auto fam = coeff_family(r, r + 2);
            for (unsigned n = 0; n < r; ++n) {
                CHECK(fam.g[n].is_zero());
                for (unsigned j = 0; j < r; ++j) CHECK(fam.b[j][n] == RationalPolynomial(Rational(j == n ? 1 : 0)));
            }
            const Rational sign = r % 2 == 1 ? 1 : -1;
            CHECK(fam.g[r] == RationalPolynomial::x() * sign);
            // The n = 0 instance of the recurrence would give x*g(0) = 0 instead,
            // which is why the g recurrence only starts at n = 1.
            CHECK(fam.g[r] != RationalPolynomial::x() * fam.g[0]);
        }
    }
    SUBCASE("b_{1,0}(n; x) is the Stirling-II generating polynomial") {
        const auto fam = coeff_family(1, 20);
        const auto st = stirling_rows(20);
        for (unsigned n = 0; n <= 20; ++n) {
            std::vector<Rational> coeffs;
            for (const auto& s : st.second[n]) coeffs.emplace_back(s);
            REQUIRE(fam.b[0][n] == RationalPolynomial(coeffs));
        }
    }
}

TEST_CASE("partial sums and the truncation identity") {
    CHECK(partial_sum_exact(1, 0, 3, q(1)) == q(5, 2));
    CHECK(partial_sum_exact(2, 1, 4, q(1)) == q(19, 12));
    CHECK(partial_sum_exact(2, 0, 1, q(-2)) == 1);
    const double approx_e = partial_sum_exact(1, 0, 30, q(1)).get_d();
    CHECK(approx_e == doctest::Approx(2.718281828459045).epsilon(1e-15));
    CHECK_THROWS(partial_sum_exact(1, 0, 0, q(1)));

    CHECK(check_truncation_identity(1, 0, 5, q(1)));
    CHECK(check_truncation_identity(3, 4, 12, q(1, 2)));
    CHECK(check_truncation_identity(2, 0, 1, q(-2)));
    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned n = 0; n <= 6; ++n)
            for (unsigned N = 1; N <= 12; ++N)
                for (const auto& x : {q(1), q(1, 2), q(-2), q(7, 3)}) REQUIRE(check_truncation_identity(r, n, N, x));
}

TEST_CASE("mod-p Dobinski sums") {
    const std::vector<u64> window{5, 7};
    auto e = e_A(window);
    CHECK(e.at(5) == 0u);
    auto d1 = d_r_A(1, 1, q(1), window);
    CHECK(d1.at(5) == 1u);
    CHECK(d_r_A(2, 0, q(1), {7}).at(7) == 4u);
    CHECK(d_r_A(2, 0, q(1), {7}).at(7) == brute_dobinski(2, 0, q(1), 7));

    SUBCASE("joint residues match the brute-force sum") {
        for (u64 p : sieve_primes(2, 60))
            for (unsigned r = 1; r <= 3; ++r)
                for (const auto& x : {q(1), q(1, 2), q(-2), q(7, 3)}) {
                    auto sums = dobinski_residues(r, 5, x, PrimeCtx(p));
                    if (!sums) {
                        CHECK(mpz_divisible_ui_p(x.get_den_mpz_t(), p));
                        continue;
                    }
                    for (unsigned n = 0; n <= 5; ++n) REQUIRE((*sums)[n] == brute_dobinski(r, n, x, p));
                }
    }
    SUBCASE("undefined at primes dividing the denominator") {
        auto half = d_r_A(1, 0, q(1, 2), {2, 3, 5});
        CHECK_FALSE(half.at(2).has_value());
        CHECK(half.exceptional_bound() == 2);
    }
}

TEST_CASE("verify_dobinski") {
    const auto window = sieve_primes(5, 200);
    auto r1 = verify_dobinski(1, 10, q(1), window);
    CHECK(r1.all_passed());
    CHECK(r1.records.size() == window.size() * 11);
    CHECK(r1.skipped.empty());

    auto r3 = verify_dobinski(3, 8, q(2, 3), sieve_primes(7, 500), 2);
    CHECK(r3.all_passed());
    CHECK(r3.skipped.empty());

    auto rhalf = verify_dobinski(2, 8, q(1, 2), sieve_primes(2, 100));
    CHECK(rhalf.all_passed());
    REQUIRE(rhalf.skipped.size() == 1);
    CHECK(rhalf.skipped[0].prime == 2);

    // n = 0 is the identity D(0) = 1 * D(0) + 0
    for (const auto& rec : r1.records)
        if (rec.index == 0) CHECK(rec.lhs == rec.rhs);

    SUBCASE("thread count does not change the report") {
        auto a = verify_dobinski(2, 6, q(-2), window, 1);
        auto b = verify_dobinski(2, 6, q(-2), window, 4);
        CHECK(a.records == b.records);
        CHECK(a.skipped == b.skipped);
    }
}

TEST_CASE("numeric identity over Q") {
    const Rational tol = make_rational(1, BigInt("100000000000000000000"));
    CHECK(numeric_identity_check(1, 3, q(1), 40, tol));
    CHECK(numeric_identity_check(2, 2, q(1), 40, tol));
    CHECK(numeric_identity_check(2, 5, q(1), 40, tol));
    CHECK(coeff_family(2, 5).b[0][5](q(1)) == 5);
    CHECK(coeff_family(2, 5).b[1][5](q(1)) == 4);
    CHECK_THROWS_AS(numeric_identity_check(1, 3, q(1), 5, tol), std::domain_error);
    CHECK_FALSE(dobinski_tail_bound(1, 0, q(5), 1).has_value());
    CHECK(dobinski_tail_bound(1, 0, q(1), 1).has_value());
}
