#include "sheafreg/cohtable.hpp"

namespace sheafreg {

std::string DimRange::str() const {
    if (exact())
        return lo.str();
    return lo.str() + ".." + (hi ? hi->str() : std::string("inf"));
}

DimRange intersect(const DimRange& a, const DimRange& b) {
    DimRange r;
    r.lo = std::max(a.lo, b.lo);
    if (a.hi && b.hi)
        r.hi = std::min(*a.hi, *b.hi);
    else if (a.hi)
        r.hi = a.hi;
    else
        r.hi = b.hi;
    if (r.hi && *r.hi < r.lo)
        throw domain_error("contradictory dimension ranges " + a.str() + " and " + b.str());
    return r;
}

CohTable::CohTable(int top, Eval eval, std::vector<RowBounds> bounds) {
    auto st = std::make_shared<State>();
    st->top = top;
    st->eval = std::move(eval);
    st->bounds = std::move(bounds);
    st->bounds.resize(static_cast<size_t>(top) + 1);
    state_ = std::move(st);
}

DimRange CohTable::value(int i, int k) const {
    if (!state_ || i < 0 || i > state_->top)
        return DimRange::exactly(0);
    const RowBounds& rb = state_->bounds[static_cast<size_t>(i)];
    if (rb.upper && k >= rb.upper->bound)
        return DimRange::exactly(eval_int(rb.upper->poly, k));
    if (rb.lower && k <= rb.lower->bound)
        return DimRange::exactly(eval_int(rb.lower->poly, k));
    {
        std::lock_guard<std::mutex> lock(state_->mutex);
        auto it = state_->memo.find({i, k});
        if (it != state_->memo.end())
            return it->second;
    }
    DimRange v = state_->eval(i, k);
    std::lock_guard<std::mutex> lock(state_->mutex);
    state_->memo.emplace(std::make_pair(i, k), v);
    return v;
}

const RowBounds& CohTable::bounds(int i) const {
    static const RowBounds kEmpty;
    if (!state_ || i < 0 || i > state_->top)
        return kEmpty;
    return state_->bounds[static_cast<size_t>(i)];
}

CohTable CohTable::twisted(int j) const {
    if (j == 0)
        return *this;
    CohTable base = *this;
    std::vector<RowBounds> bounds(static_cast<size_t>(top()) + 1);
    for (int i = 0; i <= top(); ++i) {
        const RowBounds& rb = this->bounds(i);
        if (rb.upper)
            bounds[static_cast<size_t>(i)].upper =
                SupportTail{rb.upper->bound - j, rb.upper->poly.shifted(Rat(j))};
        if (rb.lower)
            bounds[static_cast<size_t>(i)].lower =
                SupportTail{rb.lower->bound - j, rb.lower->poly.shifted(Rat(j))};
    }
    return CohTable(
        top(), [base, j](int i, int k) { return base.value(i, k + j); }, std::move(bounds));
}

namespace {

// Picks the tail certifying the wider ray; both must agree as polynomials
// where their rays overlap, which for polynomials means equality.
std::optional<SupportTail> merge_tails(const std::optional<SupportTail>& a,
                                       const std::optional<SupportTail>& b, bool upper) {
    if (!a)
        return b;
    if (!b)
        return a;
    if (a->poly != b->poly)
        throw domain_error("presentations disagree on a support tail");
    if (upper)
        return a->bound <= b->bound ? a : b;
    return a->bound >= b->bound ? a : b;
}

} // namespace

CohTable CohTable::refined_with(const CohTable& other) const {
    if (top() != other.top())
        throw domain_error("cannot refine tables with different ambient dimensions");
    CohTable a = *this;
    CohTable b = other;
    std::vector<RowBounds> bounds(static_cast<size_t>(top()) + 1);
    for (int i = 0; i <= top(); ++i) {
        bounds[static_cast<size_t>(i)].upper =
            merge_tails(a.bounds(i).upper, b.bounds(i).upper, true);
        bounds[static_cast<size_t>(i)].lower =
            merge_tails(a.bounds(i).lower, b.bounds(i).lower, false);
    }
    return CohTable(
        top(), [a, b](int i, int k) { return intersect(a.value(i, k), b.value(i, k)); },
        std::move(bounds));
}

CohTable CohTable::zero(int top) {
    std::vector<RowBounds> bounds(static_cast<size_t>(top) + 1);
    for (auto& rb : bounds) {
        rb.upper = SupportTail{0, RatPoly()};
        rb.lower = SupportTail{-1, RatPoly()};
    }
    return CohTable(
        top, [](int, int) { return DimRange::exactly(0); }, std::move(bounds));
}

} // namespace sheafreg
