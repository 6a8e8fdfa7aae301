#include "finitea/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace finitea {

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(v_, precision);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) : BigFloat(precision) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value, mpfr_prec_t precision) : BigFloat(precision) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& decimal, mpfr_prec_t precision) {
    BigFloat out(precision);
    if (mpfr_set_str(out.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat::parse: malformed number");
    return out;
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return buf.data();
}

namespace {

template <class Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
    BigFloat out(std::max(a.precision(), b.precision()));
    op(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& a) {
    BigFloat out(a.precision());
    mpfr_abs(out.get(), a.get(), MPFR_RNDN);
    return out;
}

BigFloat log(const BigFloat& a) {
    BigFloat out(a.precision());
    mpfr_log(out.get(), a.get(), MPFR_RNDN);
    return out;
}

BigFloat pow2(long e, mpfr_prec_t precision) {
    BigFloat out(1, precision);
    mpfr_mul_2si(out.get(), out.get(), e, MPFR_RNDN);
    return out;
}

}  // namespace finitea
