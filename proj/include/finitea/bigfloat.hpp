#pragma once

// RAII wrapper over an MPFR value. Every value carries its own precision;
// binary operations round to the larger precision of the two operands.

#include "finitea/rational.hpp"

#include <mpfr.h>

#include <string>

namespace finitea {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision = 128);
    BigFloat(long value, mpfr_prec_t precision);
    BigFloat(const Rational& value, mpfr_prec_t precision);
    /// Decimal literal, e.g. "0.5772156649".
    static BigFloat parse(const std::string& decimal, mpfr_prec_t precision);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with the given number of significant digits.
    std::string to_string(int digits = 30) const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    /// Bitwise identity: same precision and same value.
    bool identical(const BigFloat& o) const { return precision() == o.precision() && *this == o; }

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat pow2(long e, mpfr_prec_t precision);

/// Euler's constant to 60 significant digits (OEIS A001620).
inline constexpr const char* kEulerGammaDigits =
    "0.577215664901532860606512090082402431042159335939923598805767";

}  // namespace finitea
