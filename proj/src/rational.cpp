#include "finitea/rational.hpp"

#include <cctype>

namespace finitea {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string_view num_part = text, den_part = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part)) return std::nullopt;
    BigInt num(std::string(num_part), 10);
    BigInt den(std::string(den_part), 10);
    if (den == 0) return std::nullopt;
    if (negative) num = -num;
    return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational harmonic(unsigned m) {
    Rational h = 0;
    for (unsigned j = 1; j <= m; ++j) h += Rational(1, j);
    return h;
}

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

}  // namespace finitea
