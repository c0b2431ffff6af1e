#include "sheafreg/quadric.hpp"

#include "sheafreg/bott.hpp"
#include "sheafreg/les.hpp"

namespace sheafreg {

QuadricDivisorSpec QuadricDivisorSpec::rank4(int n, int a, int b) {
    if (n < 2)
        throw domain_error("quadric divisor: variety dimension must satisfy n >= 2");
    if (a < 0 || b < 0)
        throw domain_error("quadric divisor: rank-4 class entries must be nonnegative");
    if (a < b)
        std::swap(a, b);
    if (a - b > 1)
        throw domain_error("quadric divisor class (" + std::to_string(a) + "," + std::to_string(b) +
                           ") violates |a-b| <= 1: a divisor class on a rank-4 cone has nearly "
                           "balanced bidegree");
    if (a == 0)
        throw domain_error("quadric divisor: class (0,0) does not cut a divisor");
    QuadricDivisorSpec spec;
    spec.n = n;
    spec.rank = 4;
    spec.a = a;
    spec.b = b;
    return spec;
}

QuadricDivisorSpec QuadricDivisorSpec::rank3(int n, int s) {
    if (n < 2)
        throw domain_error("quadric divisor: variety dimension must satisfy n >= 2");
    if (s < 1)
        throw domain_error("quadric divisor: rank-3 class must satisfy s >= 1");
    QuadricDivisorSpec spec;
    spec.n = n;
    spec.rank = 3;
    spec.s = s;
    return spec;
}

int QuadricDivisorSpec::degree() const {
    return rank == 4 ? a + b : s;
}

std::string QuadricDivisorSpec::str() const {
    if (rank == 4)
        return "rank-4 cone divisor, n=" + std::to_string(n) + ", class (" + std::to_string(a) +
               "," + std::to_string(b) + ")";
    return "rank-3 cone divisor, n=" + std::to_string(n) + ", class " + std::to_string(s);
}

Classification classify(const QuadricDivisorSpec& spec) {
    Classification c;
    if (spec.degree() % 2 == 0) {
        c.kind = Classification::Kind::CompleteIntersection;
        c.hypersurface_degree = spec.degree() / 2;
    } else {
        c.kind = Classification::Kind::LinkedToLinear;
        c.hypersurface_degree = (spec.degree() + 1) / 2;
    }
    return c;
}

namespace {

Int sym_dim(int m, int v) {
    return binomial(m + v - 1, v - 1);
}

} // namespace

Int series_coh(const QuadricDivisorSpec& spec, int i, int k) {
    if (i < 0 || i > 1)
        throw domain_error("series cohomology is defined for i in {0,1} only: the cone agrees "
                           "with its smooth locus just in that range");
    const int v = spec.pencil_dim();
    if (spec.rank == 4) {
        const int limit = std::max(0, k + std::max(spec.a, spec.b) + 2);
        Int sum = 0;
        for (int m = 0; m <= limit; ++m)
            sum += sym_dim(m, v) * coh_product(1, 1, -spec.a + k - m, -spec.b + k - m, i);
        return sum;
    }
    // Rank 3: the smooth-locus series diverges at i = 1 (the vertex has
    // depth 2 there), but the classification makes X arithmetically
    // Cohen-Macaulay, which kills H^1 on the cone itself.
    if (i == 1)
        return 0;
    const int limit = std::max(0, k + 1);
    Int sum = 0;
    for (int m = 0; m <= limit; ++m)
        sum += sym_dim(m, v) * coh_line(1, 2 * k - spec.s - 2 * m, 0);
    return sum;
}

BettiTable linked_resolution(const QuadricDivisorSpec& spec) {
    Classification c = classify(spec);
    if (c.kind != Classification::Kind::LinkedToLinear)
        throw domain_error("resolution shape 0 -> S(-a-1)^2 -> S(-2)+S(-a)^2 -> I applies to the "
                           "odd-degree (linked) case; use the Koszul resolution for a complete "
                           "intersection");
    const int a = c.hypersurface_degree;
    if (a < 2)
        throw domain_error("linked resolution requires a >= 2 (degree >= 3)");
    BettiTable t(spec.ambient());
    t.add(0, 2, 1);
    t.add(0, a, 2);
    t.add(1, a + 1, 2);
    return t;
}

BettiTable resolution_of(const QuadricDivisorSpec& spec) {
    Classification c = classify(spec);
    if (c.kind == Classification::Kind::CompleteIntersection)
        return koszul(spec.ambient(), {2, c.hypersurface_degree});
    return linked_resolution(spec);
}

int depth_at_vertex(const QuadricDivisorSpec& spec) {
    return spec.rank == 4 ? 3 : 2;
}

bool vertex_containment(const QuadricDivisorSpec& spec) {
    return classify(spec).kind == Classification::Kind::LinkedToLinear;
}

SheafExpr relative_ideal_expr(const QuadricDivisorSpec& spec) {
    const int N = spec.ambient();
    const BettiTable res = resolution_of(spec);
    const int alpha = classify(spec).hypersurface_degree;

    std::vector<RowBounds> bounds(static_cast<size_t>(N) + 1);
    // h^0 row: zero until hypersurfaces of degree a appear, then the ideal
    // Hilbert function minus the multiples of the quadric.
    RatPoly h0_poly = hilbert_polynomial(res) - binomial_poly(N, N - 2);
    int h0_from = std::max(res.max_internal_degree() - N, 2 - N);
    bounds[0].lower = SupportTail{alpha - 1, RatPoly()};
    bounds[0].upper = SupportTail{std::max(h0_from, alpha), h0_poly};
    bounds[1].lower = SupportTail{-1, RatPoly()};
    bounds[1].upper = SupportTail{0, RatPoly()};

    auto eval = [spec](int i, int k) {
        if (i <= 1)
            return DimRange::exactly(series_coh(spec, i, k));
        return DimRange::unknown();
    };

    RatPoly chi = euler_poly_from_betti(res) - line_chi(N, -2);
    return SheafExpr::opaque("I_{X/Q} " + spec.str(), CohTable(N, eval, std::move(bounds)), chi);
}

} // namespace sheafreg
