#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: the differential tables are re-derived from line bundles and the
// rank solver alone, and Hilbert values are counted monomial by monomial.

#include "sheafreg/bott.hpp"
#include "sheafreg/cohtable.hpp"
#include "sheafreg/les.hpp"
#include "sheafreg/sheaf_expr.hpp"

#include <map>
#include <vector>

namespace oracle {

using namespace sheafreg;

// Derives the tables of Omega^p(k) for p = 0..n at a fixed twist k on P^n
// without the closed-form branch formulas: chains the rank solver down the
// exterior-power filtration of the twisted free module (quotient slots,
// starting from Omega^n = O(k-n-1)) and back up from Omega^0 = O(k)
// (kernel slots), intersecting the two derivations at each step.
inline std::vector<CohTable> omega_tables_via_les(int n, int k) {
    auto wedge_module = [&](int p) {
        long rank = static_cast<long>(sheafreg::binomial(n + 1, p));
        return SheafExpr::line_bundle(n, k - p, rank);
    };

    std::vector<CohTable> down(static_cast<size_t>(n) + 1);
    down[static_cast<size_t>(n)] = SheafExpr::line_bundle(n, k - n - 1).table();
    for (int p = n - 1; p >= 0; --p) {
        SheafExpr sub = SheafExpr::opaque("W", down[static_cast<size_t>(p) + 1]);
        down[static_cast<size_t>(p)] =
            les_solve(ShortExactSeq::with_unknown_quot(sub, wedge_module(p + 1)));
    }

    std::vector<CohTable> best(static_cast<size_t>(n) + 1);
    best[0] = SheafExpr::line_bundle(n, k).table().refined_with(down[0]);
    for (int p = 1; p <= n; ++p) {
        SheafExpr quot = SheafExpr::opaque("W", best[static_cast<size_t>(p) - 1]);
        CohTable up = les_solve(ShortExactSeq::with_unknown_sub(wedge_module(p), quot));
        best[static_cast<size_t>(p)] = up.refined_with(down[static_cast<size_t>(p)]);
    }
    return best;
}

// Number of degree-k monomials in C[x_0..x_N] lying in the monomial ideal
// (x_0^{d_1}, ..., x_{e-1}^{d_e}).
inline Int monomial_ideal_slice(int N, const std::vector<int>& degrees, int k) {
    Int count = 0;
    std::vector<int> exp(static_cast<size_t>(N) + 1, 0);
    auto in_ideal = [&]() {
        for (size_t i = 0; i < degrees.size(); ++i)
            if (exp[i] >= degrees[i])
                return true;
        return false;
    };
    // enumerate exponent vectors with sum k
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == N) {
            exp[static_cast<size_t>(var)] = remaining;
            if (in_ideal())
                ++count;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[static_cast<size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    if (k < 0)
        return 0;
    rec(rec, 0, k);
    return count;
}

} // namespace oracle
