#include "finitea/prime_ctx.hpp"

#include <stdexcept>

namespace finitea {

PrimeCtx::PrimeCtx(u64 p) : p_(p), tables_(std::make_unique<Tables>()) {
    if (p < 2 || p >= kMaxModulus) throw std::invalid_argument("PrimeCtx: modulus out of range");
}

std::span<const u64> PrimeCtx::inverses() const {
    std::call_once(tables_->inv_once, [this] {
        auto& inv = tables_->inv;
        inv.assign(p_, 0);
        if (p_ > 1) inv[1] = 1;
        // inv[i] = -(p / i) * inv[p mod i]
        for (u64 i = 2; i < p_; ++i) inv[i] = neg_mod(mul_mod(p_ / i, inv[p_ % i], p_), p_);
    });
    return tables_->inv;
}

std::span<const u64> PrimeCtx::factorials() const {
    std::call_once(tables_->fact_once, [this] {
        auto inv = inverses();
        auto& fact = tables_->fact;
        auto& inv_fact = tables_->inv_fact;
        fact.assign(p_, 1);
        inv_fact.assign(p_, 1);
        for (u64 k = 1; k < p_; ++k) {
            fact[k] = mul_mod(fact[k - 1], k, p_);
            inv_fact[k] = mul_mod(inv_fact[k - 1], inv[k], p_);
        }
    });
    return tables_->fact;
}

std::span<const u64> PrimeCtx::inverse_factorials() const {
    factorials();
    return tables_->inv_fact;
}

}  // namespace finitea
