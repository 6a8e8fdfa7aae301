#include "finitea/polynomial.hpp"

#include <algorithm>

namespace finitea {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial::RationalPolynomial(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

RationalPolynomial RationalPolynomial::x() { return RationalPolynomial(std::vector<Rational>{0, 1}); }

RationalPolynomial RationalPolynomial::binomial(unsigned n) {
    RationalPolynomial out(Rational(1));
    for (unsigned i = 0; i < n; ++i) {
        out = out * RationalPolynomial(std::vector<Rational>{Rational(-static_cast<long>(i)), 1});
        out *= Rational(1, i + 1);
    }
    return out;
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& c) const {
    // Taylor recomposition: after pass i, coefficient i holds p^{(i)}(c)/i!.
    std::vector<Rational> a = coeffs_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
    return RationalPolynomial(std::move(a));
}

RationalPolynomial RationalPolynomial::antiderivative() const {
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / Rational(static_cast<unsigned long>(i + 1));
    return RationalPolynomial(std::move(a));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial out = *this;
    for (auto& a : out.coeffs_) a = -a;
    return out;
}

std::string RationalPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += finitea::to_string(mag);
        if (k > 0) {
            if (!unit) out += "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace finitea
