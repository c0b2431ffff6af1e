#include "sheafreg/les.hpp"

#include <array>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace sheafreg {

namespace {

// Interval of a connecting-map rank; absent hi means unbounded.
struct RankIv {
    Int lo = 0;
    std::optional<Int> hi;
};

bool refine(RankIv& r, const std::optional<Int>& lo, const std::optional<Int>& hi) {
    bool changed = false;
    if (lo && *lo > r.lo) {
        r.lo = *lo;
        changed = true;
    }
    if (hi && (!r.hi || *hi < *r.hi)) {
        r.hi = hi;
        changed = true;
    }
    if (r.hi && *r.hi < r.lo)
        throw domain_error("inconsistent exact sequence: a connecting rank is forced negative");
    return changed;
}

// Solves one twist column of the long exact sequence. Positions are
// 3q + slot; dims[p] is empty for the unknown slot. Exactness says
// dim[p] = r[p] + r[p+1] with r the connecting ranks, r[0] = r[P] = 0.
std::vector<DimRange> solve_column(const std::vector<std::optional<DimRange>>& dims, int top,
                                   int unknown_slot) {
    const int P = static_cast<int>(dims.size());
    std::vector<RankIv> r(static_cast<size_t>(P) + 1);
    r[0] = RankIv{0, Int(0)};
    r[static_cast<size_t>(P)] = RankIv{0, Int(0)};

    auto lo_minus = [](const Int& a, const std::optional<Int>& b) -> std::optional<Int> {
        if (!b)
            return std::nullopt;
        Int v = a - *b;
        if (v < 0)
            v = 0;
        return v;
    };
    auto hi_minus = [](const std::optional<Int>& a, const Int& b) -> std::optional<Int> {
        if (!a)
            return std::nullopt;
        return *a - b;
    };

    const int max_passes = 4 * P + 8;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        for (int j = 0; j < P; ++j) {
            if (!dims[static_cast<size_t>(j)])
                continue;
            const DimRange& g = *dims[static_cast<size_t>(j)];
            changed |= refine(r[static_cast<size_t>(j) + 1], lo_minus(g.lo, r[static_cast<size_t>(j)].hi),
                              hi_minus(g.hi, r[static_cast<size_t>(j)].lo));
        }
        for (int j = P - 1; j >= 0; --j) {
            if (!dims[static_cast<size_t>(j)])
                continue;
            const DimRange& g = *dims[static_cast<size_t>(j)];
            changed |= refine(r[static_cast<size_t>(j)], lo_minus(g.lo, r[static_cast<size_t>(j) + 1].hi),
                              hi_minus(g.hi, r[static_cast<size_t>(j) + 1].lo));
        }
        if (!changed)
            break;
    }

    // Final consistency: every known group must still be reachable.
    for (int j = 0; j < P; ++j) {
        if (!dims[static_cast<size_t>(j)])
            continue;
        const DimRange& g = *dims[static_cast<size_t>(j)];
        const RankIv& a = r[static_cast<size_t>(j)];
        const RankIv& b = r[static_cast<size_t>(j) + 1];
        if (g.hi && a.lo + b.lo > *g.hi)
            throw domain_error("inconsistent exact sequence: forced dimension exceeds a known group");
        if (a.hi && b.hi && g.lo > *a.hi + *b.hi)
            throw domain_error("inconsistent exact sequence: known group exceeds its forced bound");
    }

    std::vector<DimRange> out(static_cast<size_t>(top) + 1);
    for (int q = 0; q <= top; ++q) {
        const RankIv& a = r[static_cast<size_t>(3 * q + unknown_slot)];
        const RankIv& b = r[static_cast<size_t>(3 * q + unknown_slot) + 1];
        DimRange v;
        v.lo = a.lo + b.lo;
        if (a.hi && b.hi)
            v.hi = *a.hi + *b.hi;
        else
            v.hi = std::nullopt;
        out[static_cast<size_t>(q)] = v;
    }
    return out;
}

void check_tail_nonnegative(const RatPoly& poly, int bound, bool upper) {
    if (poly.is_zero())
        return;
    if ((upper && poly.leading() < 0) || (!upper && poly.leading() * Rat((poly.degree() % 2 == 0) ? 1 : -1) < 0))
        throw domain_error("inconsistent exact sequence: derived support tail goes negative");
    for (int d = 0; d <= poly.degree() + 1; ++d) {
        int k = upper ? bound + d : bound - d;
        if (poly.eval(Rat(k)) < 0)
            throw domain_error("inconsistent exact sequence: derived support tail is negative at k=" +
                               std::to_string(k));
    }
}

// Derives one side of the unknown slot's support tails by solving the long
// exact sequence over the inputs' closed-form tails. In the joint tail
// region the sequence splits at identically-zero groups; a segment
// containing exactly one unknown group is solved by the alternating sum.
void solve_tails(const std::array<const SheafExpr*, 3>& slots, int unknown_slot, int top,
                 bool upper, std::vector<RowBounds>& out) {
    const int P = 3 * (top + 1);
    struct Pos {
        bool unknown = false;
        bool have = false;
        RatPoly poly;
    };
    std::vector<Pos> pos(static_cast<size_t>(P));
    std::optional<int> joint;
    for (int q = 0; q <= top; ++q)
        for (int s = 0; s < 3; ++s) {
            Pos& p = pos[static_cast<size_t>(3 * q + s)];
            if (s == unknown_slot) {
                p.unknown = true;
                continue;
            }
            const RowBounds& rb = slots[static_cast<size_t>(s)]->table().bounds(q);
            const auto& tail = upper ? rb.upper : rb.lower;
            if (!tail)
                continue;
            p.have = true;
            p.poly = tail->poly;
            if (!joint)
                joint = tail->bound;
            else
                joint = upper ? std::max(*joint, tail->bound) : std::min(*joint, tail->bound);
        }
    if (!joint)
        return;

    auto splits = [&](int j) {
        const Pos& p = pos[static_cast<size_t>(j)];
        return !p.unknown && p.have && p.poly.is_zero();
    };

    int start = 0;
    while (start < P) {
        if (splits(start)) {
            ++start;
            continue;
        }
        int end = start;
        while (end + 1 < P && !splits(end + 1))
            ++end;
        // solve the segment [start, end]
        int n_unknown = 0, u = -1;
        bool poisoned = false;
        for (int j = start; j <= end; ++j) {
            const Pos& p = pos[static_cast<size_t>(j)];
            if (p.unknown) {
                ++n_unknown;
                u = j;
            } else if (!p.have) {
                poisoned = true;
            }
        }
        if (n_unknown == 1 && !poisoned) {
            RatPoly solved;
            for (int j = start; j <= end; ++j) {
                if (j == u)
                    continue;
                bool negative = ((j - u) % 2) == 0; // same parity as u contributes negatively
                const RatPoly& pj = pos[static_cast<size_t>(j)].poly;
                solved = negative ? solved - pj : solved + pj;
            }
            check_tail_nonnegative(solved, *joint, upper);
            int q = u / 3;
            if (upper)
                out[static_cast<size_t>(q)].upper = SupportTail{*joint, solved};
            else
                out[static_cast<size_t>(q)].lower = SupportTail{*joint, solved};
        }
        start = end + 1;
    }
}

} // namespace

ShortExactSeq ShortExactSeq::with_unknown_quot(SheafExpr sub, SheafExpr mid) {
    return ShortExactSeq{std::move(sub), std::move(mid), std::nullopt};
}

ShortExactSeq ShortExactSeq::with_unknown_mid(SheafExpr sub, SheafExpr quot) {
    return ShortExactSeq{std::move(sub), std::nullopt, std::move(quot)};
}

ShortExactSeq ShortExactSeq::with_unknown_sub(SheafExpr mid, SheafExpr quot) {
    return ShortExactSeq{std::nullopt, std::move(mid), std::move(quot)};
}

Slot ShortExactSeq::unknown() const {
    int missing = (!sub ? 1 : 0) + (!mid ? 1 : 0) + (!quot ? 1 : 0);
    if (missing != 1)
        throw domain_error("short exact sequence must have exactly one unknown slot");
    if (!sub)
        return Slot::Sub;
    if (!mid)
        return Slot::Mid;
    return Slot::Quot;
}

int ShortExactSeq::top() const {
    int t = -1;
    for (const auto* e : {&sub, &mid, &quot})
        if (*e) {
            if (t >= 0 && (*e)->top() != t)
                throw domain_error("short exact sequence slots live on different ambient spaces");
            t = (*e)->top();
        }
    return t;
}

CohTable les_solve(const ShortExactSeq& seq) {
    const Slot unknown = seq.unknown();
    const int top = seq.top();
    const int u = static_cast<int>(unknown);

    // The known expressions, with the unknown slot standing in for itself.
    std::array<SheafExpr, 3> slots = {
        seq.sub ? *seq.sub : SheafExpr::opaque("?", CohTable::zero(top)),
        seq.mid ? *seq.mid : SheafExpr::opaque("?", CohTable::zero(top)),
        seq.quot ? *seq.quot : SheafExpr::opaque("?", CohTable::zero(top)),
    };

    std::vector<RowBounds> bounds(static_cast<size_t>(top) + 1);
    {
        std::array<const SheafExpr*, 3> view = {&slots[0], &slots[1], &slots[2]};
        solve_tails(view, u, top, true, bounds);
        solve_tails(view, u, top, false, bounds);
    }

    struct Cache {
        std::mutex mutex;
        std::map<int, std::vector<DimRange>> columns;
    };
    auto cache = std::make_shared<Cache>();

    auto eval = [slots, u, top, cache](int i, int k) {
        {
            std::lock_guard<std::mutex> lock(cache->mutex);
            auto it = cache->columns.find(k);
            if (it != cache->columns.end())
                return it->second[static_cast<size_t>(i)];
        }
        std::vector<std::optional<DimRange>> dims(static_cast<size_t>(3 * (top + 1)));
        for (int q = 0; q <= top; ++q)
            for (int s = 0; s < 3; ++s)
                if (s != u)
                    dims[static_cast<size_t>(3 * q + s)] = slots[static_cast<size_t>(s)].table().value(q, k);
        std::vector<DimRange> col = solve_column(dims, top, u);
        std::lock_guard<std::mutex> lock(cache->mutex);
        auto [it, inserted] = cache->columns.emplace(k, std::move(col));
        return it->second[static_cast<size_t>(i)];
    };

    return CohTable(top, eval, std::move(bounds));
}

CohTable sheaf_table_from_betti(const BettiTable& t) {
    const int N = t.ambient();
    const int s = t.max_homological_index();
    auto free_module = [&](int i) {
        std::vector<std::pair<int, long>> summands;
        for (const auto& [key, count] : t.entries())
            if (key.first == i)
                summands.push_back({-key.second, static_cast<long>(count)});
        return SheafExpr::line_sum(N, summands);
    };

    SheafExpr current = free_module(s);
    for (int i = s - 1; i >= 0; --i) {
        SheafExpr fi = free_module(i);
        RatPoly chi = *fi.euler_poly() - *current.euler_poly();
        CohTable solved = les_solve(ShortExactSeq::with_unknown_quot(current, fi));
        current = SheafExpr::opaque(i == 0 ? "ideal sheaf" : "syzygy sheaf " + std::to_string(i),
                                    std::move(solved), std::move(chi));
    }
    return current.table();
}

RatPoly euler_poly_from_betti(const BettiTable& t) {
    RatPoly chi;
    for (const auto& [key, count] : t.entries()) {
        RatPoly term = line_chi(t.ambient(), -key.second) * Rat(count);
        chi = (key.first % 2 == 0) ? chi + term : chi - term;
    }
    return chi;
}

CohTable ideal_table_from_presentation(const SheafExpr& sub, const SheafExpr& mid, int c1) {
    return les_solve(ShortExactSeq::with_unknown_quot(sub.twisted(-c1), mid.twisted(-c1)));
}

} // namespace sheafreg
