#pragma once

#include "sheafreg/polynomial.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace sheafreg {

/// Dimension of a cohomology group: an exact value when lo == hi, an
/// interval when the long exact sequence does not force the value, and
/// unbounded above when nothing is known beyond nonnegativity.
struct DimRange {
    Int lo = 0;
    std::optional<Int> hi = Int(0);

    bool exact() const { return hi.has_value() && *hi == lo; }
    bool is_zero() const { return exact() && lo == 0; }

    static DimRange exactly(Int v) { return {v, v}; }
    static DimRange between(Int lo, Int hi) { return {std::move(lo), std::move(hi)}; }
    static DimRange unknown() { return {Int(0), std::nullopt}; }

    bool operator==(const DimRange& o) const { return lo == o.lo && hi == o.hi; }

    std::string str() const;
};

/// Intersection of two ranges describing the same group; throws on empty
/// intersection (the inputs contradict each other).
DimRange intersect(const DimRange& a, const DimRange& b);

/// One-sided closed form for a cohomology row: for an upper tail the value
/// at twist k equals poly(k) for every k >= bound, for a lower tail for
/// every k <= bound. A zero polynomial certifies vanishing on the ray.
struct SupportTail {
    int bound = 0;
    RatPoly poly;

    bool vanishes() const { return poly.is_zero(); }
};

struct RowBounds {
    std::optional<SupportTail> lower;
    std::optional<SupportTail> upper;
};

/// Lazily evaluated cohomology table of a one-parameter family of sheaves:
/// (i, k) -> dim H^i(F(k)). Rows outside [0, top] are identically zero.
/// Values are memoized; the memo is locked, so concurrent queries are safe.
class CohTable {
  public:
    using Eval = std::function<DimRange(int i, int k)>;

    CohTable() = default;
    CohTable(int top, Eval eval, std::vector<RowBounds> bounds);

    int top() const { return state_->top; }

    DimRange value(int i, int k) const;

    const RowBounds& bounds(int i) const;
    std::optional<SupportTail> upper_tail(int i) const { return bounds(i).upper; }
    std::optional<SupportTail> lower_tail(int i) const { return bounds(i).lower; }

    /// Table of F(j + k) as a function of k.
    CohTable twisted(int j) const;

    /// Pointwise intersection with a second table of the same family.
    /// Ranges narrow, never widen; disagreement throws.
    CohTable refined_with(const CohTable& other) const;

    static CohTable zero(int top);

  private:
    struct State {
        int top = 0;
        Eval eval;
        std::vector<RowBounds> bounds;
        mutable std::mutex mutex;
        mutable std::map<std::pair<int, int>, DimRange> memo;
    };
    std::shared_ptr<State> state_;
};

} // namespace sheafreg
