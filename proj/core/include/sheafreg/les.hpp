#pragma once

#include "sheafreg/betti.hpp"
#include "sheafreg/sheaf_expr.hpp"

#include <optional>

namespace sheafreg {

enum class Slot { Sub = 0, Mid = 1, Quot = 2 };

/// Short exact sequence 0 -> sub -> mid -> quot -> 0 of sheaf expressions
/// with exactly one unknown slot.
struct ShortExactSeq {
    std::optional<SheafExpr> sub;
    std::optional<SheafExpr> mid;
    std::optional<SheafExpr> quot;

    static ShortExactSeq with_unknown_quot(SheafExpr sub, SheafExpr mid);
    static ShortExactSeq with_unknown_mid(SheafExpr sub, SheafExpr quot);
    static ShortExactSeq with_unknown_sub(SheafExpr mid, SheafExpr quot);

    Slot unknown() const;
    int top() const;
};

/// Derives the unknown slot's cohomology table from the long exact
/// sequence. At each twist the sequence is solved by rank bookkeeping:
/// values are forced wherever the known groups pin the connecting ranks,
/// and honest intervals are returned otherwise. Support bounds of the
/// output are solved the same way over the inputs' closed-form tails.
/// Contradictory inputs (a negative forced dimension) raise domain_error.
CohTable les_solve(const ShortExactSeq& seq);

/// Ideal-sheaf cohomology of the subscheme resolved by a Betti table:
/// sheafifies the resolution and chains les_solve over the syzygy
/// sequences from the top. Exact where forced, intervals elsewhere.
CohTable sheaf_table_from_betti(const BettiTable& t);

/// Euler characteristic polynomial of the same ideal sheaf.
RatPoly euler_poly_from_betti(const BettiTable& t);

/// Ideal-sheaf table from a presentation 0 -> sub -> mid -> I_X(c1) -> 0,
/// untwisted so queries are in the natural grading of I_X(k).
CohTable ideal_table_from_presentation(const SheafExpr& sub, const SheafExpr& mid, int c1);

} // namespace sheafreg
