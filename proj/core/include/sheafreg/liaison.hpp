#pragma once

#include "sheafreg/betti.hpp"
#include "sheafreg/les.hpp"

#include <utility>
#include <vector>

namespace sheafreg {

/// Graded dimensions of the deficiency modules M^i = (+)_k H^i(I_X(k)),
/// i = 1..n, of a locally Cohen-Macaulay subscheme, together with the data
/// of a linking complete intersection of total degree d in P^N.
struct DeficiencyModules {
    int N = 0;
    int n = 0;
    int d = 0;
    std::vector<GradedDims> modules; // modules[i-1] holds M^i

    const GradedDims& module(int i) const;
};

/// Extracts finitely supported deficiency modules from an ideal-sheaf
/// cohomology table. Requires vanishing support bounds on both sides and
/// exact values inside the window.
DeficiencyModules deficiency_modules_from_table(const CohTable& table, int n, int d);

struct DualityCheck {
    bool holds = true;
    /// Violations (i, k) of dim M^{n-i+1}(X2)_k = dim M^i(X1)_{d-N-1-k}.
    std::vector<std::pair<int, int>> witnesses;
};

/// Liaison duality: under linkage by a complete intersection of total
/// degree d, the deficiency modules dualize with a twist by N+1-d.
DualityCheck duality_check(const DeficiencyModules& m1, const DeficiencyModules& m2);

/// The linkage sequence 0 -> I_X -> I_{X1} -> omega_{X2}(N+1-d) -> 0, with
/// the complete intersection's Koszul-derived sheaf table in the I_X slot
/// and the dualizing-sheaf slot left to the solver. Solving it yields a
/// table whose twist-k column is omega_{X2}(N+1-d+k).
ShortExactSeq linked_ideal_sequence(const CohTable& x1_table, const std::vector<int>& ci_degrees,
                                    int n);

} // namespace sheafreg
