#pragma once

#include "finitea/rational.hpp"

#include <limits>
#include <string>
#include <vector>

namespace finitea {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class RationalPolynomial {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);
    RationalPolynomial(const Rational& c);  // NOLINT: constants convert implicitly

    static RationalPolynomial x();
    /// binom(x, n) = x(x-1)...(x-n+1)/n!.
    static RationalPolynomial binomial(unsigned n);

    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& x) const;

    /// p(x + c), by repeated synthetic division.
    RationalPolynomial shifted(const Rational& c) const;
    /// The antiderivative with zero constant term.
    RationalPolynomial antiderivative() const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& c);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
    friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= c; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    RationalPolynomial operator-() const;

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form, e.g. "1/2*x^2 - 1/12".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace finitea
