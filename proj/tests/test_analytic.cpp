#include "doctest.h"

#include "finitea/analytic.hpp"
#include "finitea/dobinski.hpp"
#include "finitea/gregory.hpp"

#include <cmath>

using namespace finitea;

namespace {

Rational q(long n, unsigned long d = 1) { return make_rational(n, d); }

// |a - exact| <= 2^{-bits} |exact| + 2^{-2 bits}
bool close_to(const BigFloat& a, const Rational& exact, long bits) {
    const mpfr_prec_t W = 2 * a.precision() + 64;
    BigFloat e(exact, W), d(W), bound(W);
    mpfr_sub(d.get(), a.get(), e.get(), MPFR_RNDN);
    mpfr_abs(d.get(), d.get(), MPFR_RNDN);
    mpfr_abs(bound.get(), e.get(), MPFR_RNDN);
    mpfr_mul_2si(bound.get(), bound.get(), -bits, MPFR_RNDN);
    mpfr_add(bound.get(), bound.get(), pow2(-2 * bits, W).get(), MPFR_RNDN);
    return d <= bound;
}

double distance(const BigFloat& a, const BigFloat& b) { return abs(a - b).to_double(); }

}  // namespace

TEST_CASE("BigFloat basics") {
    BigFloat a(q(1, 3), 128);
    CHECK(a.precision() == 128);
    CHECK((a * BigFloat(3, 128)).to_double() == doctest::Approx(1.0));
    CHECK(BigFloat(q(-5, 2), 64).sign() < 0);
    CHECK((BigFloat(q(1, 2), 64) + BigFloat(q(1, 2), 256)).precision() == 256);
    CHECK_THROWS_AS(BigFloat::parse("0.5x", 64), std::invalid_argument);

    BigFloat moved = std::move(a);
    CHECK(moved.to_string(5) == "3.3333e-01");
}

TEST_CASE("embedded gamma reference agrees with MPFR") {
    BigFloat ref = euler_gamma_reference(190);
    BigFloat mp(190);
    mpfr_const_euler(mp.get(), MPFR_RNDN);
    CHECK(distance(ref, mp) < 1e-58);
    CHECK(ref.to_string(12) == "5.77215664902e-01");
}

TEST_CASE("gregory_value_float examples") {
    auto G = gregory_value_float(0, 100, 128);
    REQUIRE(G.size() == 101);
    CHECK(G[0].to_double() == 1.0);
    CHECK(close_to(G[4], q(-19, 720), 64));
    CHECK(G[4].precision() == 128);
    CHECK(close_to(G[100], gregory_values(0, 100)[100], 64));

    auto H = gregory_value_float(q(1, 2), 3, 64);
    CHECK(close_to(H[1], 1, 32));
    // G_3(1/2) vanishes exactly; the absolute floor keeps validation from looping
    CHECK(std::fabs(H[3].to_double()) < 1e-18);
    CHECK_THROWS_AS(gregory_value_float(0, 5, 32), std::invalid_argument);
}

TEST_CASE("float Gregory values agree with exact ones for n <= 200") {
    for (const Rational& x : {q(0), q(1, 2), q(-1, 2)}) {
        const auto exact = gregory_values(x, 200);
        const auto rec = gregory_value_float(x, 200, 128);
        const auto quad = gregory_value_integral(x, 200, 128);
        for (unsigned n = 0; n <= 200; ++n) {
            CAPTURE(x);
            CAPTURE(n);
            CHECK(close_to(rec[n], exact[n], 64));
            CHECK(close_to(quad[n], exact[n], 64));
        }
    }
}

TEST_CASE("quadrature against recurrence and a frozen high-n oracle") {
    const auto rec = gregory_value_float(q(7, 3), 2000, 128);
    const auto quad = gregory_value_integral(q(7, 3), 2000, 128);
    for (unsigned n : {500u, 1000u, 1999u, 2000u}) CHECK(distance(rec[n], quad[n]) <= 1e-30 * std::fabs(rec[n].to_double()));

    // independent mpmath quadrature at 40 digits
    const auto big = gregory_value_integral(0, 100000, 96);
    CHECK(big[100000].to_string(22) == "-6.578507625280712282696e-08");
    const auto half = gregory_value_integral(q(1, 2), 10000, 96);
    CHECK(half[10000].to_string(22) == "-2.767985774563119182140e-08");
}

TEST_CASE("mascheroni_partial") {
    const BigFloat gamma = euler_gamma_reference(128);
    CHECK(distance(mascheroni_partial(0, 1, 10000, 128), gamma) < 1e-3);
    CHECK(distance(mascheroni_partial(0, 0, 10000, 128), gamma) < 1e-3);
    CHECK(distance(mascheroni_partial(q(1, 2), 2, 2000, 128), gamma) < 1e-3);
    CHECK(distance(mascheroni_partial(q(-1, 2), 1, 2000, 128), gamma) < 1e-3);
    CHECK(distance(mascheroni_partial(q(7, 3), 3, 2000, 128), gamma) < 1e-3);

    // m = 0 and m = 1 approximate the same constant
    const auto a = mascheroni_partial(0, 0, 10000, 128);
    const auto b = mascheroni_partial(0, 1, 10000, 128);
    CHECK(distance(a, b) < 1e-3);

    CHECK_THROWS_AS(mascheroni_partial(-1, 0, 10, 128), std::domain_error);
    CHECK_THROWS_AS(mascheroni_partial(q(-3, 2), 0, 10, 128), std::domain_error);
    CHECK(mascheroni_partials(0, 1, {10, 100}, 128)[1].identical(mascheroni_partial(0, 1, 100, 128)));
}

TEST_CASE("partial sums settle as N grows") {
    for (unsigned m : {0u, 1u}) {
        const auto v = mascheroni_partials(0, m, {1000, 2000, 10000, 20000, 100000, 200000}, 64);
        const double d3 = distance(v[0], v[1]);
        const double d4 = distance(v[2], v[3]);
        const double d5 = distance(v[4], v[5]);
        CAPTURE(m);
        CHECK(d4 < d3);
        CHECK(d5 < d4);
    }
}

TEST_CASE("bla101_partial") {
    const BigFloat gamma = euler_gamma_reference(128);
    for (unsigned N : {1u, 50u, 3000u}) {
        CHECK(bla101_partial(1, 0, N, 128).identical(mascheroni_partial(0, 0, N, 128)));
        CHECK(bla101_partial(1, q(1, 2), N, 96).identical(mascheroni_partial(q(1, 2), 0, N, 96)));
    }
    CHECK(distance(bla101_partial(2, 0, 10000, 128), gamma) < 1e-3);
    CHECK(distance(bla101_partial(3, q(1, 2), 2000, 128), gamma) < 1e-2);

    // N_{n,k} via shifts equals summing shifted values directly
    const auto g0 = gregory_value_float(0, 40, 128);
    const auto g1 = gregory_value_float(1, 40, 128);
    BigFloat direct(128);
    for (unsigned n = 1; n <= 40; ++n) {
        BigFloat t = (g0[n] + g1[n]) / BigFloat(static_cast<long>(n), 128);
        direct = (n % 2 == 1) ? direct + t : direct - t;
    }
    direct = (direct - log(BigFloat(2, 128))) / BigFloat(2, 128);
    CHECK(distance(bla101_partial(2, 0, 40, 128), direct) < 1e-35);

    CHECK_THROWS_AS(bla101_partial(0, 0, 10, 128), std::invalid_argument);
}

TEST_CASE("asymptotic sanity") {
    const double ratio = asymptotic_sanity(q(1, 2), 10000).to_double();
    CHECK(ratio > 0.5);
    CHECK(ratio < 2.0);

    const auto G = gregory_values_auto(q(1, 2), 3000, 96);
    for (unsigned n = 10; n <= 3000; ++n) {
        CAPTURE(n);
        CHECK(G[n].sign() == (n % 2 == 1 ? 1 : -1));
    }

    const auto exact = gregory_values(0, 200);
    for (unsigned n = 3; n <= 200; ++n) CHECK(abs(exact[n]) < abs(exact[n - 1]));

    // integer x: only the 1/log n term survives
    const double r0 = asymptotic_sanity(0, 5000).to_double();
    CHECK(r0 > 0.5);
    CHECK(r0 < 2.0);
}

TEST_CASE("d_r_numeric") {
    BigFloat e(128);
    mpfr_set_ui(e.get(), 1, MPFR_RNDN);
    mpfr_exp(e.get(), e.get(), MPFR_RNDN);
    CHECK(distance(d_r_numeric(1, 0, 1, 128), e) < 1e-35);
    // I_0(2) = sum 1/(k!)^2, from an independent Bessel-series oracle
    const BigFloat bessel = BigFloat::parse("2.27958530233606726743720444081153335328584110278545905407084", 256);
    CHECK(distance(d_r_numeric(2, 0, 1, 128), bessel) < 1e-36);
    CHECK(d_r_numeric(1, 2, 1, 128).to_string(30) == (e * BigFloat(2, 128)).to_string(30));

    // D(n) = b(n) e to 30 digits
    const auto b = bell(10);
    for (unsigned n = 0; n <= 10; ++n) {
        BigFloat ratio = d_r_numeric(1, n, 1, 128) / e;
        CHECK(distance(ratio, BigFloat(Rational(b[n]), 128)) < 1e-30 * b[n].get_d());
    }

    // D_2(n) = b_{2,0}(n) D_2(0) + b_{2,1}(n) D_2(1)
    const auto fam = coeff_family(2, 10);
    const BigFloat d0 = d_r_numeric(2, 0, 1, 128), d1 = d_r_numeric(2, 1, 1, 128);
    for (unsigned n = 0; n <= 10; ++n) {
        BigFloat rhs = BigFloat(fam.b[0][n](1), 128) * d0 + BigFloat(fam.b[1][n](1), 128) * d1;
        BigFloat lhs = d_r_numeric(2, n, 1, 128);
        CHECK(distance(lhs, rhs) < 1e-30 * std::fabs(lhs.to_double()));
    }

    // negative and fractional arguments
    BigFloat em1(128);
    mpfr_set_si(em1.get(), -1, MPFR_RNDN);
    mpfr_exp(em1.get(), em1.get(), MPFR_RNDN);
    CHECK(distance(d_r_numeric(1, 0, -1, 128), em1) < 1e-35);
    CHECK(d_r_numeric(3, 4, q(7, 3), 96).precision() == 96);
    CHECK_THROWS_AS(d_r_numeric(0, 0, 1, 128), std::invalid_argument);
}
