#include "finitea/series.hpp"

namespace finitea {

RationalSeries series_log1p(std::size_t order) {
    RationalSeries s(order);
    for (std::size_t n = 1; n <= order; ++n)
        s[n] = Rational(n % 2 == 1 ? 1 : -1, static_cast<unsigned long>(n));
    return s;
}

RationalSeries series_pow_binomial(const Rational& x, std::size_t order) {
    RationalSeries s(order);
    Rational c = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = c;
        c = c * (x - static_cast<unsigned long>(n)) / static_cast<unsigned long>(n + 1);
    }
    return s;
}

PolynomialSeries series_pow_binomial_symbolic(std::size_t order) {
    PolynomialSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s[n] = RationalPolynomial::binomial(static_cast<unsigned>(n));
    return s;
}

RationalSeries series_gregory_coefficients(std::size_t order) {
    RationalSeries one(order);
    one[0] = 1;
    return one / series_log1p(order + 1).divided_by_t();
}

PolynomialSeries series_gregory_polynomials(std::size_t order) {
    auto log_over_t = series_log1p(order + 1).divided_by_t();
    PolynomialSeries denom(order);
    for (std::size_t i = 0; i <= order; ++i) denom[i] = log_over_t[i];
    return series_pow_binomial_symbolic(order) / denom;
}

bool check_euler_operator_ode(unsigned r, std::size_t order) {
    if (r == 0 || order < r) throw std::invalid_argument("check_euler_operator_ode: need 1 <= r <= order");
    // E(z): coefficient of z^{rn} is 1/(n!)^r.
    RationalSeries e(order);
    for (std::size_t n = 0; r * n <= order; ++n) {
        BigInt f = factorial(static_cast<unsigned>(n));
        BigInt denom;
        mpz_pow_ui(denom.get_mpz_t(), f.get_mpz_t(), r);
        e[r * n] = make_rational(1, denom);
    }
    RationalSeries lhs = e;
    for (unsigned step = 0; step < r; ++step)
        for (std::size_t k = 0; k <= order; ++k) lhs[k] *= static_cast<unsigned long>(k);

    RationalSeries rz_pow(order);
    BigInt rr;
    mpz_ui_pow_ui(rr.get_mpz_t(), r, r);
    rz_pow[r] = Rational(rr);
    return lhs == rz_pow * e;
}

}  // namespace finitea
