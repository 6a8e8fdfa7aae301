#include "doctest.h"

#include "finitea/a_element.hpp"
#include "finitea/primes.hpp"
#include "finitea/prime_ctx.hpp"
#include "finitea/residue.hpp"

#include <random>

using namespace finitea;

namespace {

// Smallest r in [0, p) with den*r == num (mod p); the brute-force oracle.
std::optional<u64> brute_mod(const Rational& q, u64 p) {
    for (u64 r = 0; r < p; ++r) {
        BigInt diff = q.get_den() * BigInt(static_cast<unsigned long>(r)) - q.get_num();
        if (mpz_divisible_ui_p(diff.get_mpz_t(), p)) return r;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("sieve_primes") {
    CHECK(sieve_primes(2, 10) == std::vector<u64>{2, 3, 5, 7});
    CHECK(sieve_primes(5, 5) == std::vector<u64>{5});
    CHECK(sieve_primes(24, 28).empty());
    CHECK(sieve_primes(10, 9).empty());

    SUBCASE("matches trial division near 10^6") {
        const u64 lo = 1'000'000, hi = 1'000'100;
        std::vector<u64> oracle;
        for (u64 n = lo; n <= hi; ++n)
            if (is_prime_trial(n)) oracle.push_back(n);
        CHECK(sieve_primes(lo, hi) == oracle);
    }
    SUBCASE("segment boundaries") {
        const u64 lo = 3, hi = 600'000;
        auto primes = sieve_primes(lo, hi);
        CHECK(primes.size() == 49097);  // pi(600000) = 49098, minus the prime 2
        for (std::size_t i = 0; i < primes.size(); i += 997) CHECK(is_prime_trial(primes[i]));
    }
}

TEST_CASE("PrimeCtx tables") {
    for (u64 p : sieve_primes(2, 400)) {
        PrimeCtx ctx(p);
        auto inv = ctx.inverses();
        for (u64 i = 1; i < p; ++i) REQUIRE(mul_mod(i, inv[i], p) == 1);
        auto fact = ctx.factorials();
        auto inv_fact = ctx.inverse_factorials();
        CHECK(fact[0] == 1);
        for (u64 k = 1; k < p; ++k) REQUIRE(fact[k] == mul_mod(k, fact[k - 1], p));
        for (u64 k = 0; k < p; ++k) REQUIRE(mul_mod(fact[k], inv_fact[k], p) == 1);
        // Wilson's theorem
        CHECK(fact[p - 1] == p - 1);
    }
    CHECK_THROWS(PrimeCtx(1));
}

TEST_CASE("Residue arithmetic rejects mixed moduli") {
    Residue a(3, 7), b(5, 7);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((-a).value() == 4);
    CHECK_THROWS_AS(a + Residue(1, 11), std::invalid_argument);
}

TEST_CASE("rational_mod") {
    CHECK(rational_mod(Rational(1, 2), 5) == 3u);
    CHECK_FALSE(rational_mod(Rational(7, 3), 3).has_value());
    const Rational q = make_rational(-19, 720);
    CHECK(rational_mod(q, 7) == brute_mod(q, 7));
    CHECK(rational_mod(q, 7) == 5u);
    CHECK(rational_mod(Rational(-1), 13) == 12u);

    SUBCASE("ring homomorphism where defined") {
        std::mt19937_64 rng(12345);
        std::uniform_int_distribution<long> num(-500, 500), den(1, 300);
        const auto primes = sieve_primes(2, 200);
        for (int iter = 0; iter < 400; ++iter) {
            Rational a = make_rational(num(rng), den(rng));
            Rational b = make_rational(num(rng), den(rng));
            u64 p = primes[static_cast<std::size_t>(iter) % primes.size()];
            auto ra = rational_mod(a, p), rb = rational_mod(b, p);
            if (!ra || !rb) continue;
            CHECK(rational_mod(a + b, p) == add_mod(*ra, *rb, p));
            CHECK(rational_mod(a - b, p) == sub_mod(*ra, *rb, p));
            CHECK(rational_mod(a * b, p) == mul_mod(*ra, *rb, p));
        }
    }
}

TEST_CASE("rational_pow_mod_p2") {
    CHECK(rational_pow_mod_p2(Rational(2), 4, 5) == 16u);
    CHECK(rational_pow_mod_p2(Rational(2), 2, 3) == 4u);
    // brute force: r * 2^6 == 3^6 (mod 49)
    u64 oracle = 0;
    for (u64 r = 0; r < 49; ++r)
        if ((r * 64 + 49 * 100 - 729) % 49 == 0) oracle = r;
    CHECK(rational_pow_mod_p2(Rational(3, 2), 6, 7) == oracle);
    CHECK(oracle == 29);
    CHECK_FALSE(rational_pow_mod_p2(Rational(7, 2), 6, 7).has_value());
    CHECK_FALSE(rational_pow_mod_p2(Rational(2, 7), 6, 7).has_value());
    CHECK_THROWS(rational_pow_mod_p2(Rational(2), 3, u64{1} << 33));
}

TEST_CASE("binom_rational_mod") {
    PrimeCtx p7(7), p11(11), p5(5);
    CHECK(binom_rational_mod(Rational(-1), 6, p7)->value() == 1);
    CHECK(binom_rational_mod(Rational(3), 10, p11)->value() == 0);
    // (1/2)(-1/2)/2 = -1/8
    const Rational exact = Rational(1, 2) * Rational(-1, 2) / 2;
    CHECK(exact == make_rational(-1, 8));
    CHECK(binom_rational_mod(Rational(1, 2), 2, p5)->value() == *brute_mod(exact, 5));
    CHECK_FALSE(binom_rational_mod(Rational(1, 5), 2, p5).has_value());
    CHECK_FALSE(binom_rational_mod(Rational(1, 2), 5, p5).has_value());

    SUBCASE("binom(x, p-1) is the indicator of -1 for large p") {
        const std::vector<Rational> xs{Rational(-1), Rational(0), Rational(1, 2), Rational(7, 3),
                                       Rational(-3), Rational(-5, 4), Rational(10)};
        for (const auto& x : xs) {
            // beyond every numerator/denominator of x and x+1
            for (u64 p : sieve_primes(17, 600)) {
                PrimeCtx ctx(p);
                auto r = binom_rational_mod(x, p - 1, ctx);
                REQUIRE(r.has_value());
                CHECK(r->value() == static_cast<u64>(delta_minus_one(x)));
            }
        }
    }
}

TEST_CASE("AElement equality honours the exceptional bound") {
    const auto window = sieve_primes(2, 50);
    auto third = AElement::constant(window, Rational(1, 3));
    CHECK(third.exceptional_bound() == 3);
    CHECK_FALSE(third.at(3).has_value());
    CHECK(third.at(7) == 5u);

    auto one = third.scaled(Rational(3));
    CHECK(one.equals(AElement::constant(window, Rational(1))));

    auto diff = AElement::constant(window, Rational(1, 2)) - AElement::constant(window, Rational(1, 2));
    CHECK(diff.equals(AElement::zero(window)));

    // A difference only at p = 2 vanishes in A once 2 is exceptional.
    auto a = AElement::zero(window);
    auto b = AElement::zero(window);
    b.set(0, 1);
    CHECK(a.mismatches(b) == std::vector<u64>{2});
    b.raise_bound(2);
    CHECK(a.equals(b));

    CHECK_THROWS(a + AElement::zero(sieve_primes(2, 30)));
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7/3") == make_rational(-7, 3));
    CHECK(parse_rational("+4") == Rational(4));
    CHECK(parse_rational("0") == Rational(0));
    CHECK_FALSE(parse_rational("1//2").has_value());
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational(" 1").has_value());
    CHECK_FALSE(parse_rational("1/-2").has_value());
    CHECK_FALSE(parse_rational("").has_value());
    CHECK_FALSE(parse_rational("x").has_value());
}
