#pragma once

// Truncated formal power series in t. Coefficients are either Rational or
// RationalPolynomial (for generating functions whose coefficients depend on x).

#include "finitea/polynomial.hpp"
#include "finitea/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace finitea {

namespace detail {

inline std::optional<Rational> unit_constant(const Rational& c) {
    if (c == 0) return std::nullopt;
    return c;
}

inline std::optional<Rational> unit_constant(const RationalPolynomial& c) {
    if (c.degree() != 0) return std::nullopt;
    return c.coeff(0);
}

}  // namespace detail

class NonUnitSeries : public std::domain_error {
public:
    NonUnitSeries() : std::domain_error("non-unit series") {}
};

/// Coefficients of t^0..t^order; everything beyond order is discarded.
template <class Coeff>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    TruncatedSeries(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }
    Coeff& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i)
            for (std::size_t j = 0; i + j <= a.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return out;
    }

    /// a / b; b must have a unit (nonzero rational) constant term.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        auto lead = detail::unit_constant(b.coeffs_[0]);
        if (!lead) throw NonUnitSeries();
        const Rational inv = 1 / *lead;
        TruncatedSeries out(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n) {
            Coeff acc = a.coeffs_[n];
            for (std::size_t j = 0; j < n; ++j) acc -= out.coeffs_[j] * b.coeffs_[n - j];
            acc *= inv;
            out.coeffs_[n] = std::move(acc);
        }
        return out;
    }

    /// Drops a zero constant term and lowers the order by one.
    TruncatedSeries divided_by_t() const {
        if (!(coeffs_[0] == Coeff{})) throw std::domain_error("divided_by_t: nonzero constant term");
        if (order() == 0) throw std::domain_error("divided_by_t: order 0");
        return TruncatedSeries(order() - 1, std::vector<Coeff>(coeffs_.begin() + 1, coeffs_.end()));
    }

    /// Same series with the order raised (zero fill) or lowered (truncation).
    TruncatedSeries with_order(std::size_t order) const { return TruncatedSeries(order, coeffs_); }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void check_order(const TruncatedSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("TruncatedSeries: orders differ");
    }

    std::vector<Coeff> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using PolynomialSeries = TruncatedSeries<RationalPolynomial>;

/// log(1+t) = t - t^2/2 + t^3/3 - ...
RationalSeries series_log1p(std::size_t order);

/// (1+t)^x for a rational exponent: coefficients binom(x, n).
RationalSeries series_pow_binomial(const Rational& x, std::size_t order);

/// (1+t)^x with x symbolic: coefficients are the polynomials binom(x, n).
PolynomialSeries series_pow_binomial_symbolic(std::size_t order);

/// t / log(1+t), the Gregory coefficient generating function.
RationalSeries series_gregory_coefficients(std::size_t order);

/// t (1+t)^x / log(1+t) with x symbolic.
PolynomialSeries series_gregory_polynomials(std::size_t order);

/// The formal identity theta^r E(z) = (rz)^r E(z) for E(z) = sum z^{rn}/(n!)^r,
/// compared coefficientwise up to z^order. theta = z d/dz.
bool check_euler_operator_ode(unsigned r, std::size_t order);

}  // namespace finitea
