#include "finitea/stirling.hpp"

namespace finitea {

StirlingTriangles stirling_rows(unsigned n_max) {
    StirlingTriangles t;
    t.first.resize(n_max + 1);
    t.second.resize(n_max + 1);
    t.first[0] = {1};
    t.second[0] = {1};
    for (unsigned n = 1; n <= n_max; ++n) {
        auto& s1 = t.first[n];
        auto& s2 = t.second[n];
        const auto& p1 = t.first[n - 1];
        const auto& p2 = t.second[n - 1];
        s1.assign(n + 1, 0);
        s2.assign(n + 1, 0);
        for (unsigned k = 1; k <= n; ++k) {
            const BigInt above = k < n ? p1[k] : BigInt(0);
            const BigInt above2 = k < n ? p2[k] : BigInt(0);
            s1[k] = p1[k - 1] + (n - 1) * above;
            s2[k] = p2[k - 1] + k * above2;
        }
    }
    return t;
}

std::vector<u64> stirling1_row_mod(unsigned n, const PrimeCtx& ctx) {
    std::vector<u64> row{1 % ctx.p()};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<u64> next(m + 1, 0);
        const u64 factor = (m - 1) % ctx.p();
        for (unsigned k = 1; k <= m; ++k) {
            const u64 above = k < m ? row[k] : 0;
            next[k] = ctx.add(row[k - 1], ctx.mul(factor, above));
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace finitea
