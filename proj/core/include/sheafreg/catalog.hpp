#pragma once

#include "sheafreg/betti.hpp"
#include "sheafreg/les.hpp"
#include "sheafreg/quadric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sheafreg {

/// Catalog entry: a subvariety of projective space with a presentation
/// from which its cohomology is derived.
///
/// Known exception: the Veronese surface in P^4 (the one surface exempt
/// from the d-3 projection bound) is not an entry; it admits none of the
/// presentation shapes the catalog consumes.
struct VarietySpec {
    enum class Family {
        CompleteIntersection,
        PalatiniScroll,
        SegreThreefold,
        QuadricDivisor,
        TwoSkewLines,
    };

    Family family = Family::CompleteIntersection;
    int N = 0;                // complete intersection: ambient dimension
    std::vector<int> degrees; // complete intersection: hypersurface degrees
    int t = 0;                // Palatini scroll: family parameter
    std::optional<QuadricDivisorSpec> quadric;

    static VarietySpec complete_intersection(int N, std::vector<int> degrees);
    static VarietySpec palatini(int t);
    static VarietySpec segre();
    static VarietySpec quadric_divisor(QuadricDivisorSpec spec);
    static VarietySpec skew_lines();

    int ambient() const;
    int dim() const;
    int codim() const { return ambient() - dim(); }

    /// Catalog degree: product of degrees for a complete intersection,
    /// 10t^2 + 16t + 7 for the scroll family, 3 for the Segre threefold,
    /// 2 for two skew lines. Cross-checked against the computed Hilbert
    /// polynomial by invariants().
    Int degree() const;

    std::string name() const;
    std::string describe() const;
};

/// Presentations of the ideal: a Betti table, a two-term sheaf sequence
/// 0 -> sub -> mid -> I_X(c1) -> 0, and/or the structure sheaf for the
/// restriction sequence 0 -> I_X -> O -> O_X -> 0. Entries with several
/// presentations cross-validate: their tables are intersected.
struct IdealPresentation {
    struct TwoTermSes {
        SheafExpr sub;
        SheafExpr mid;
        int c1;
    };

    std::optional<BettiTable> betti;
    std::optional<TwoTermSes> ses;
    std::optional<SheafExpr> structure_sheaf;
};

IdealPresentation presentation(const VarietySpec& spec);

/// Ideal-sheaf cohomology table of the entry, refined across every
/// available presentation.
CohTable cohomology_table(const VarietySpec& spec);

RatPoly variety_hilbert_polynomial(const VarietySpec& spec);

struct InvariantRecord {
    Int degree;
    int dim = 0;
    int codim = 0;
    int reg = 0;
    std::optional<int> first_normal_from;
    RatPoly hilbert;
    Int sectional_genus;
};

/// Invariants computed through the engines (never read off a stored
/// answer); a degree mismatch between routes raises domain_error.
InvariantRecord invariants(const VarietySpec& spec);

/// The named entries with their default parameters.
std::vector<VarietySpec> catalog_defaults();

} // namespace sheafreg
