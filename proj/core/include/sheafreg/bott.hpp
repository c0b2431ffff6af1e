#pragma once

#include "sheafreg/cohtable.hpp"

namespace sheafreg {

/// O(k)^r on P^n.
struct LineBundleOnPn {
    int n;
    long k;
    long r = 1;

    LineBundleOnPn(int n, long k, long r = 1);
};

/// Twisted differential form bundle Omega^p(k) on P^n.
struct TwistedDifferential {
    int n;
    int p;
    long k;

    TwistedDifferential(int n, int p, long k);
};

/// O(a, b) on P^{n1} x P^{n2}.
struct ProductLineBundle {
    int n1;
    int n2;
    long a;
    long b;

    ProductLineBundle(int n1, int n2, long a, long b);
};

/// dim H^q(P^n, O(k)^r). Nonzero only at q = 0 (k >= 0) and q = n
/// (k <= -n-1).
Int coh_line(const LineBundleOnPn& bundle, int q);
Int coh_line(int n, long k, int q, long r = 1);

/// dim H^q(P^n, Omega^p(k)) by the Bott formula.
Int coh_omega(const TwistedDifferential& bundle, int q);
Int coh_omega(int n, int p, long k, int q);

/// dim H^q of O(a, b) on a product of projective spaces (Kunneth sum).
Int coh_product(const ProductLineBundle& bundle, int q);
Int coh_product(int n1, int n2, long a, long b, int q);

/// Support bounds: closed forms for the row q as a function of the twist,
/// exact outside a finite window. Consumed by the exact-sequence solver.
RowBounds line_bounds(int n, int q, long r = 1);
RowBounds omega_bounds(int n, int p, int q);
RowBounds product_bounds(int n1, int n2, long a, long b, int q);

/// Euler characteristic polynomials in the twist k.
RatPoly line_chi(int n, long c, long r = 1);     // chi of O(k + c)^r
RatPoly omega_chi(int n, int p, long c);         // chi of Omega^p(k + c)

} // namespace sheafreg
