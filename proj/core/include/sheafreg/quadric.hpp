#pragma once

#include "sheafreg/betti.hpp"
#include "sheafreg/sheaf_expr.hpp"

#include <string>

namespace sheafreg {

/// Divisorial subvariety X of dimension n >= 2 on a quadric cone Q of
/// rank 3 or 4 in P^{n+2}. On the smooth locus U = Q - vertex the ideal of
/// X in Q pulls back from the base of the cone projection:
///
///   rank 4: from O(-a, -b) on a smooth quadric surface, with a, b >= 0
///           and |a - b| <= 1 (stored with a >= b);
///   rank 3: from O(-s) on P^1 through the degree-2 conic, s = deg X.
///           (Twisting by O_Q(1) therefore shifts the P^1-degree by 2.)
struct QuadricDivisorSpec {
    int n = 0;
    int rank = 0;
    int a = 0, b = 0;
    int s = 0;

    static QuadricDivisorSpec rank4(int n, int a, int b);
    static QuadricDivisorSpec rank3(int n, int s);

    int degree() const;
    int ambient() const { return n + 2; }

    /// Dimension of the cone vertex.
    int vertex_dim() const { return rank == 4 ? n - 2 : n - 1; }

    /// dim V where the vertex is P(V); the pushforward of O along the cone
    /// projection is the sum of the symmetric powers S^m(V) twisted by -m.
    int pencil_dim() const { return rank == 4 ? n - 1 : n; }

    std::string str() const;
};

struct Classification {
    enum class Kind { CompleteIntersection, LinkedToLinear };
    Kind kind = Kind::CompleteIntersection;

    /// Degree of the second hypersurface cutting X (with Q).
    int hypersurface_degree = 0;
};

/// Even degree: complete intersection of Q and one more hypersurface.
/// Odd degree: arithmetically Cohen-Macaulay and linked to a linear space.
Classification classify(const QuadricDivisorSpec& spec);

/// dim H^i(Q, I_{X/Q}(k)) for i in {0, 1}, summed from the pushforward
/// series; only finitely many symmetric powers contribute. Rows i >= 2 are
/// rejected: the comparison between the cone and its smooth locus
/// identifies cohomology there only up to i = 1.
Int series_coh(const QuadricDivisorSpec& spec, int i, int k);

/// Minimal free resolution of the saturated ideal in the linked case:
/// 0 -> S(-a-1)^2 -> S(-2) + S(-a)^2 -> I_X -> 0, with a >= 2.
BettiTable linked_resolution(const QuadricDivisorSpec& spec);

/// Resolution matching the classification (Koszul in the complete
/// intersection case).
BettiTable resolution_of(const QuadricDivisorSpec& spec);

/// Depth of the relative ideal along the vertex: 2 for rank 3, 3 for rank 4.
int depth_at_vertex(const QuadricDivisorSpec& spec);

/// The vertex lies on X exactly when X is not a complete intersection.
bool vertex_containment(const QuadricDivisorSpec& spec);

/// I_{X/Q} packaged as an expression slot on P^{n+2}: exact values and
/// support bounds for i <= 1, unbounded ranges above.
SheafExpr relative_ideal_expr(const QuadricDivisorSpec& spec);

} // namespace sheafreg
