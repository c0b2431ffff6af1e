#pragma once

#include "sheafreg/bott.hpp"
#include "sheafreg/cohtable.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sheafreg {

/// Symbolic sheaf expression: a cohomology table plus an Euler
/// characteristic polynomial (when one is known) and a printable label.
/// Twisting composes additively and shifts both.
class SheafExpr {
  public:
    /// Direct sum of line bundles O(c)^r on P^n, summands given as
    /// (twist, multiplicity) pairs.
    static SheafExpr line_sum(int n, const std::vector<std::pair<int, long>>& summands);
    static SheafExpr line_bundle(int n, int c, long r = 1);

    /// Omega^p(c) on P^n.
    static SheafExpr differential(int n, int p, int c);

    /// O(a, b) on P^{n1} x P^{n2}; a twist shifts both components.
    static SheafExpr product_line(int n1, int n2, int a, int b);

    /// Wraps an externally computed table (derived tables, pushforwards,
    /// structure sheaves of catalog varieties).
    static SheafExpr opaque(std::string label, CohTable table,
                            std::optional<RatPoly> chi = std::nullopt);

    SheafExpr twisted(int j) const;

    const std::string& label() const { return label_; }
    const CohTable& table() const { return table_; }
    const std::optional<RatPoly>& euler_poly() const { return chi_; }
    int top() const { return table_.top(); }

    /// Euler characteristic at a specific twist, summed from the table.
    /// Exact whenever every row is exact at that twist.
    Int euler_at(int k) const;

  private:
    SheafExpr(std::string label, CohTable table, std::optional<RatPoly> chi)
        : label_(std::move(label)), table_(std::move(table)), chi_(std::move(chi)) {}

    std::string label_;
    CohTable table_;
    std::optional<RatPoly> chi_;
};

} // namespace sheafreg
