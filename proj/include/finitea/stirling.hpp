#pragma once

#include "finitea/prime_ctx.hpp"
#include "finitea/rational.hpp"

#include <vector>

namespace finitea {

/// Stirling triangles up to row n_max. first[n][j] is the unsigned first kind
/// [n j] (the sign (-1)^{n-j} lives in the generating function, not here);
/// second[n][k] is the second kind {n k}. Row n has n+1 entries.
struct StirlingTriangles {
    std::vector<std::vector<BigInt>> first;
    std::vector<std::vector<BigInt>> second;
};

StirlingTriangles stirling_rows(unsigned n_max);

/// Row n of the unsigned first-kind triangle reduced mod p (entries 0..n).
std::vector<u64> stirling1_row_mod(unsigned n, const PrimeCtx& ctx);

}  // namespace finitea
