#pragma once

#include "finitea/modular.hpp"

#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace finitea {

/// Evaluation context for one prime p. The inverse and factorial tables are
/// built on first use (thread-safe) and never change afterwards.
class PrimeCtx {
public:
    explicit PrimeCtx(u64 p);

    u64 p() const { return p_; }

    /// Inverses of 0..p-1 mod p; entry 0 is 0. O(p) memory.
    std::span<const u64> inverses() const;
    /// k! mod p for 0 <= k <= p-1.
    std::span<const u64> factorials() const;
    /// (k!)^{-1} mod p for 0 <= k <= p-1.
    std::span<const u64> inverse_factorials() const;

    u64 inverse(u64 i) const { return inverses()[i % p_]; }

    u64 add(u64 a, u64 b) const { return add_mod(a, b, p_); }
    u64 sub(u64 a, u64 b) const { return sub_mod(a, b, p_); }
    u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p_); }
    u64 neg(u64 a) const { return neg_mod(a, p_); }
    u64 pow(u64 a, u64 e) const { return pow_mod(a, e, p_); }

private:
    struct Tables {
        std::once_flag inv_once, fact_once;
        std::vector<u64> inv, fact, inv_fact;
    };

    u64 p_;
    std::unique_ptr<Tables> tables_;
};

}  // namespace finitea
