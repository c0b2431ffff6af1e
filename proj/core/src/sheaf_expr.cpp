#include "sheafreg/sheaf_expr.hpp"

#include <limits>

namespace sheafreg {

namespace {

// Shifts a row-bounds description from the bundle's own grading to the
// k-grading of a summand twisted by c: value(k) = base(k + c).
RowBounds shift_bounds(const RowBounds& base, int c) {
    RowBounds out;
    if (base.upper)
        out.upper = SupportTail{base.upper->bound - c, base.upper->poly.shifted(Rat(c))};
    if (base.lower)
        out.lower = SupportTail{base.lower->bound - c, base.lower->poly.shifted(Rat(c))};
    return out;
}

// Sum of row bounds of summands: tails add, the certified ray shrinks to
// the intersection of the summands' rays.
std::optional<SupportTail> sum_upper(const std::vector<RowBounds>& rows) {
    SupportTail out{std::numeric_limits<int>::min(), RatPoly()};
    for (const auto& rb : rows) {
        if (!rb.upper)
            return std::nullopt;
        out.bound = std::max(out.bound, rb.upper->bound);
        out.poly = out.poly + rb.upper->poly;
    }
    return out;
}

std::optional<SupportTail> sum_lower(const std::vector<RowBounds>& rows) {
    SupportTail out{std::numeric_limits<int>::max(), RatPoly()};
    for (const auto& rb : rows) {
        if (!rb.lower)
            return std::nullopt;
        out.bound = std::min(out.bound, rb.lower->bound);
        out.poly = out.poly + rb.lower->poly;
    }
    return out;
}

std::string twist_label(const std::string& base, int c) {
    if (c == 0)
        return base;
    return base + "(" + std::to_string(c) + ")";
}

} // namespace

SheafExpr SheafExpr::line_sum(int n, const std::vector<std::pair<int, long>>& summands) {
    if (summands.empty())
        return SheafExpr("0", CohTable::zero(n), RatPoly());
    std::vector<RowBounds> bounds(static_cast<size_t>(n) + 1);
    RatPoly chi;
    std::string label;
    for (const auto& [c, r] : summands) {
        LineBundleOnPn check(n, c, r);
        chi = chi + line_chi(n, c, r);
        if (!label.empty())
            label += " + ";
        label += twist_label("O", c);
        if (r != 1)
            label += "^" + std::to_string(r);
    }
    for (int q = 0; q <= n; ++q) {
        std::vector<RowBounds> rows;
        rows.reserve(summands.size());
        for (const auto& [c, r] : summands)
            rows.push_back(shift_bounds(line_bounds(n, q, r), c));
        bounds[static_cast<size_t>(q)] = RowBounds{sum_lower(rows), sum_upper(rows)};
    }
    auto eval = [n, summands](int i, int k) {
        Int sum = 0;
        for (const auto& [c, r] : summands)
            sum += coh_line(n, k + c, i, r);
        return DimRange::exactly(sum);
    };
    return SheafExpr(label, CohTable(n, eval, std::move(bounds)), chi);
}

SheafExpr SheafExpr::line_bundle(int n, int c, long r) {
    return line_sum(n, {{c, r}});
}

SheafExpr SheafExpr::differential(int n, int p, int c) {
    TwistedDifferential check(n, p, c);
    std::vector<RowBounds> bounds(static_cast<size_t>(n) + 1);
    for (int q = 0; q <= n; ++q)
        bounds[static_cast<size_t>(q)] = shift_bounds(omega_bounds(n, p, q), c);
    auto eval = [n, p, c](int i, int k) { return DimRange::exactly(coh_omega(n, p, k + c, i)); };
    std::string label = "Omega^" + std::to_string(p) + "_P" + std::to_string(n);
    return SheafExpr(twist_label(label, c), CohTable(n, eval, std::move(bounds)), omega_chi(n, p, c));
}

SheafExpr SheafExpr::product_line(int n1, int n2, int a, int b) {
    ProductLineBundle check(n1, n2, a, b);
    const int top = n1 + n2;
    std::vector<RowBounds> bounds(static_cast<size_t>(top) + 1);
    for (int q = 0; q <= top; ++q)
        bounds[static_cast<size_t>(q)] = product_bounds(n1, n2, a, b, q);
    auto eval = [n1, n2, a, b](int i, int k) {
        return DimRange::exactly(coh_product(n1, n2, a + k, b + k, i));
    };
    RatPoly chi = line_chi(n1, a) * line_chi(n2, b);
    std::string label = "O(" + std::to_string(a) + "," + std::to_string(b) + ")_P" +
                        std::to_string(n1) + "xP" + std::to_string(n2);
    return SheafExpr(label, CohTable(top, eval, std::move(bounds)), chi);
}

SheafExpr SheafExpr::opaque(std::string label, CohTable table, std::optional<RatPoly> chi) {
    return SheafExpr(std::move(label), std::move(table), std::move(chi));
}

SheafExpr SheafExpr::twisted(int j) const {
    if (j == 0)
        return *this;
    std::optional<RatPoly> chi;
    if (chi_)
        chi = chi_->shifted(Rat(j));
    return SheafExpr(twist_label(label_, j), table_.twisted(j), chi);
}

Int SheafExpr::euler_at(int k) const {
    Int chi = 0;
    for (int i = 0; i <= top(); ++i) {
        DimRange v = table_.value(i, k);
        if (!v.exact())
            throw domain_error("Euler characteristic needs exact values; row " + std::to_string(i) +
                               " at twist " + std::to_string(k) + " is " + v.str());
        chi += (i % 2 == 0) ? v.lo : -v.lo;
    }
    return chi;
}

} // namespace sheafreg
