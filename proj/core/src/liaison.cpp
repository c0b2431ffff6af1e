#include "sheafreg/liaison.hpp"

#include <numeric>
#include <set>

namespace sheafreg {

const GradedDims& DeficiencyModules::module(int i) const {
    if (i < 1 || i > n)
        throw domain_error("deficiency module index must satisfy 1 <= i <= n");
    return modules[static_cast<size_t>(i) - 1];
}

DeficiencyModules deficiency_modules_from_table(const CohTable& table, int n, int d) {
    DeficiencyModules out;
    out.N = table.top();
    out.n = n;
    out.d = d;
    for (int i = 1; i <= n; ++i) {
        auto upper = table.upper_tail(i);
        auto lower = table.lower_tail(i);
        if (!upper || !upper->vanishes() || !lower || !lower->vanishes())
            throw domain_error("deficiency module M^" + std::to_string(i) +
                               " has no finite-support certificate");
        GradedDims g;
        g.zero_above = upper->bound;
        g.zero_below = lower->bound;
        for (int k = lower->bound + 1; k < upper->bound; ++k) {
            DimRange v = table.value(i, k);
            if (!v.exact())
                throw domain_error("deficiency module M^" + std::to_string(i) + " at degree " +
                                   std::to_string(k) + " is not exact: " + v.str());
            if (v.lo != 0)
                g.values[k] = v.lo;
        }
        out.modules.push_back(std::move(g));
    }
    return out;
}

DualityCheck duality_check(const DeficiencyModules& m1, const DeficiencyModules& m2) {
    if (m1.N != m2.N || m1.n != m2.n || m1.d != m2.d)
        throw domain_error("duality check requires matching (N, n, d) on both sides");
    const int shift = m1.d - m1.N - 1;
    DualityCheck out;
    for (int i = 1; i <= m1.n; ++i) {
        const GradedDims& left = m1.module(i);
        const GradedDims& right = m2.module(m1.n - i + 1);
        std::set<int> checkpoints;
        for (const auto& [k, v] : right.values)
            checkpoints.insert(k);
        for (const auto& [j, v] : left.values)
            checkpoints.insert(shift - j); // k with d-N-1-k = j
        for (int k : checkpoints) {
            if (right.at(k) != left.at(shift - k)) {
                out.holds = false;
                out.witnesses.push_back({i, k});
            }
        }
    }
    return out;
}

ShortExactSeq linked_ideal_sequence(const CohTable& x1_table, const std::vector<int>& ci_degrees,
                                    int n) {
    const int N = x1_table.top();
    if (static_cast<int>(ci_degrees.size()) != N - n)
        throw domain_error("a linking complete intersection in P^" + std::to_string(N) +
                           " of an n=" + std::to_string(n) + " dimensional subscheme needs " +
                           std::to_string(N - n) + " hypersurfaces, got " +
                           std::to_string(ci_degrees.size()));
    BettiTable ci = koszul(N, ci_degrees);
    SheafExpr sub = SheafExpr::opaque("ideal of the linking complete intersection",
                                      sheaf_table_from_betti(ci), euler_poly_from_betti(ci));
    SheafExpr mid = SheafExpr::opaque("ideal of the linked subscheme", x1_table);
    return ShortExactSeq::with_unknown_quot(std::move(sub), std::move(mid));
}

} // namespace sheafreg
