#include "sheafreg/catalog.hpp"

#include "sheafreg/bott.hpp"
#include "sheafreg/regularity.hpp"

#include <numeric>

namespace sheafreg {

VarietySpec VarietySpec::complete_intersection(int N, std::vector<int> degrees) {
    if (N < 1)
        throw domain_error("complete intersection: ambient dimension must satisfy N >= 1");
    if (degrees.empty() || static_cast<int>(degrees.size()) > N)
        throw domain_error("complete intersection: need 1 <= #degrees <= N");
    for (int d : degrees)
        if (d < 1)
            throw domain_error("complete intersection: degrees must be positive");
    VarietySpec spec;
    spec.family = Family::CompleteIntersection;
    spec.N = N;
    spec.degrees = std::move(degrees);
    return spec;
}

VarietySpec VarietySpec::palatini(int t) {
    if (t < 0)
        throw domain_error("scroll family parameter must satisfy t >= 0");
    VarietySpec spec;
    spec.family = Family::PalatiniScroll;
    spec.t = t;
    return spec;
}

VarietySpec VarietySpec::segre() {
    VarietySpec spec;
    spec.family = Family::SegreThreefold;
    return spec;
}

VarietySpec VarietySpec::quadric_divisor(QuadricDivisorSpec q) {
    VarietySpec spec;
    spec.family = Family::QuadricDivisor;
    spec.quadric = q;
    return spec;
}

VarietySpec VarietySpec::skew_lines() {
    VarietySpec spec;
    spec.family = Family::TwoSkewLines;
    return spec;
}

int VarietySpec::ambient() const {
    switch (family) {
    case Family::CompleteIntersection:
        return N;
    case Family::PalatiniScroll:
    case Family::SegreThreefold:
        return 5;
    case Family::QuadricDivisor:
        return quadric->ambient();
    case Family::TwoSkewLines:
        return 3;
    }
    return 0;
}

int VarietySpec::dim() const {
    switch (family) {
    case Family::CompleteIntersection:
        return N - static_cast<int>(degrees.size());
    case Family::PalatiniScroll:
    case Family::SegreThreefold:
        return 3;
    case Family::QuadricDivisor:
        return quadric->n;
    case Family::TwoSkewLines:
        return 1;
    }
    return 0;
}

Int VarietySpec::degree() const {
    switch (family) {
    case Family::CompleteIntersection: {
        Int d = 1;
        for (int di : degrees)
            d *= di;
        return d;
    }
    case Family::PalatiniScroll:
        return Int(10) * t * t + Int(16) * t + 7;
    case Family::SegreThreefold:
        return 3;
    case Family::QuadricDivisor:
        return quadric->degree();
    case Family::TwoSkewLines:
        return 2;
    }
    return 0;
}

std::string VarietySpec::name() const {
    switch (family) {
    case Family::CompleteIntersection:
        return "ci";
    case Family::PalatiniScroll:
        return "palatini";
    case Family::SegreThreefold:
        return "segre";
    case Family::QuadricDivisor:
        return "quadric";
    case Family::TwoSkewLines:
        return "skew-lines";
    }
    return "?";
}

std::string VarietySpec::describe() const {
    switch (family) {
    case Family::CompleteIntersection: {
        std::string d;
        for (int di : degrees)
            d += (d.empty() ? "" : ",") + std::to_string(di);
        return "complete intersection of degrees (" + d + ") in P^" + std::to_string(N);
    }
    case Family::PalatiniScroll:
        return "dependency-locus scroll X_t in P^5, t=" + std::to_string(t);
    case Family::SegreThreefold:
        return "Segre threefold P^1 x P^2 in P^5";
    case Family::QuadricDivisor:
        return quadric->str() + " in P^" + std::to_string(ambient());
    case Family::TwoSkewLines:
        return "two skew lines in P^3";
    }
    return "?";
}

namespace {

BettiTable segre_table() {
    // determinantal: three quadrics with two linear syzygies
    BettiTable t(5);
    t.add(0, 2, 3);
    t.add(1, 3, 2);
    return t;
}

BettiTable skew_lines_table() {
    BettiTable t(3);
    t.add(0, 2, 4);
    t.add(1, 3, 4);
    t.add(2, 4, 1);
    return t;
}

SheafExpr two_lines_structure_sheaf() {
    // O_X for two disjoint lines: each line is a P^1 embedded with degree 1.
    std::vector<RowBounds> bounds(4);
    bounds[0].lower = SupportTail{-1, RatPoly()};
    bounds[0].upper = SupportTail{-1, binomial_poly(1, 1) * Rat(2)};
    bounds[1].lower = SupportTail{-1, RatPoly({Rat(-2), Rat(-2)})}; // 2*binom(-k-1,1)
    bounds[1].upper = SupportTail{-1, RatPoly()};
    for (int i = 2; i <= 3; ++i) {
        bounds[static_cast<size_t>(i)].lower = SupportTail{-1, RatPoly()};
        bounds[static_cast<size_t>(i)].upper = SupportTail{0, RatPoly()};
    }
    auto eval = [](int i, int k) {
        if (i <= 1)
            return DimRange::exactly(coh_line(1, k, i, 2));
        return DimRange::exactly(0);
    };
    return SheafExpr::opaque("structure sheaf of two skew lines", CohTable(3, eval, std::move(bounds)),
                             binomial_poly(1, 1) * Rat(2));
}

} // namespace

IdealPresentation presentation(const VarietySpec& spec) {
    IdealPresentation p;
    switch (spec.family) {
    case VarietySpec::Family::CompleteIntersection:
        p.betti = koszul(spec.N, spec.degrees);
        break;
    case VarietySpec::Family::PalatiniScroll:
        p.ses = IdealPresentation::TwoTermSes{
            SheafExpr::line_bundle(5, 0, 4),
            SheafExpr::differential(5, 1, 2 + spec.t),
            4 + 5 * spec.t,
        };
        break;
    case VarietySpec::Family::SegreThreefold:
        p.betti = segre_table();
        break;
    case VarietySpec::Family::QuadricDivisor:
        p.betti = resolution_of(*spec.quadric);
        break;
    case VarietySpec::Family::TwoSkewLines:
        p.betti = skew_lines_table();
        p.structure_sheaf = two_lines_structure_sheaf();
        break;
    }
    return p;
}

CohTable cohomology_table(const VarietySpec& spec) {
    IdealPresentation p = presentation(spec);
    std::optional<CohTable> table;
    auto merge = [&table](CohTable next) {
        table = table ? table->refined_with(next) : std::move(next);
    };
    if (p.betti)
        merge(sheaf_table_from_betti(*p.betti));
    if (p.ses)
        merge(ideal_table_from_presentation(p.ses->sub, p.ses->mid, p.ses->c1));
    if (p.structure_sheaf)
        merge(les_solve(ShortExactSeq::with_unknown_sub(
            SheafExpr::line_bundle(spec.ambient(), 0, 1), *p.structure_sheaf)));
    return *table;
}

RatPoly variety_hilbert_polynomial(const VarietySpec& spec) {
    IdealPresentation p = presentation(spec);
    const int N = spec.ambient();
    if (p.betti)
        return variety_polynomial(*p.betti);
    RatPoly chi_ideal =
        (*p.ses->mid.euler_poly() - *p.ses->sub.euler_poly()).shifted(Rat(-p.ses->c1));
    return binomial_poly(N, N) - chi_ideal;
}

InvariantRecord invariants(const VarietySpec& spec) {
    InvariantRecord rec;
    rec.dim = spec.dim();
    rec.codim = spec.codim();
    rec.hilbert = variety_hilbert_polynomial(spec);
    DegreeGenus dg = degree_and_sectional_genus(rec.hilbert, rec.dim);
    rec.degree = dg.degree;
    rec.sectional_genus = dg.sectional_genus;
    if (rec.degree != spec.degree())
        throw domain_error("degree mismatch for " + spec.describe() + ": Hilbert polynomial gives " +
                           rec.degree.str() + ", catalog metadata says " + spec.degree().str());
    RegScanResult scan = regularity_scan(cohomology_table(spec), rec.dim);
    rec.reg = scan.reg;
    rec.first_normal_from = scan.first_normal_from;
    return rec;
}

std::vector<VarietySpec> catalog_defaults() {
    return {
        VarietySpec::palatini(0),
        VarietySpec::segre(),
        VarietySpec::complete_intersection(5, {2, 2}),
        VarietySpec::quadric_divisor(QuadricDivisorSpec::rank4(3, 2, 1)),
        VarietySpec::skew_lines(),
    };
}

} // namespace sheafreg
