#include "sheafreg/bott.hpp"

namespace sheafreg {

namespace {

void check_q(int q, int top, const char* what) {
    if (q < 0 || q > top)
        throw domain_error(std::string(what) + ": cohomological index q=" + std::to_string(q) +
                           " outside [0, " + std::to_string(top) + "]");
}

RowBounds zero_row() {
    return RowBounds{SupportTail{-1, RatPoly()}, SupportTail{0, RatPoly()}};
}

// binom(c0 - k, n) as a polynomial in k
RatPoly falling_neg(int n, long c0) {
    RatPoly p = RatPoly::constant(Rat(1));
    for (int j = 0; j < n; ++j)
        p = p * RatPoly({Rat(c0 - j), Rat(-1)});
    return p * Rat(Int(1), factorial(n));
}

} // namespace

LineBundleOnPn::LineBundleOnPn(int n_, long k_, long r_) : n(n_), k(k_), r(r_) {
    if (n < 1)
        throw domain_error("line bundle: ambient dimension must satisfy n >= 1");
    if (r < 1)
        throw domain_error("line bundle: rank multiplier must satisfy r >= 1");
}

TwistedDifferential::TwistedDifferential(int n_, int p_, long k_) : n(n_), p(p_), k(k_) {
    if (n < 1)
        throw domain_error("twisted differential: ambient dimension must satisfy n >= 1");
    if (p < 0 || p > n)
        throw domain_error("twisted differential: form degree must satisfy 0 <= p <= n");
}

ProductLineBundle::ProductLineBundle(int n1_, int n2_, long a_, long b_)
    : n1(n1_), n2(n2_), a(a_), b(b_) {
    if (n1 < 1 || n2 < 1)
        throw domain_error("product line bundle: factor dimensions must satisfy n1, n2 >= 1");
}

Int coh_line(int n, long k, int q, long r) {
    check_q(q, n, "coh_line");
    if (q == 0)
        return r * binomial(n + k, n);
    if (q == n)
        return r * binomial(-k - 1, n);
    return 0;
}

Int coh_line(const LineBundleOnPn& bundle, int q) {
    return coh_line(bundle.n, bundle.k, q, bundle.r);
}

Int coh_omega(int n, int p, long k, int q) {
    if (p < 0 || p > n)
        throw domain_error("coh_omega: form degree must satisfy 0 <= p <= n");
    check_q(q, n, "coh_omega");
    if (q == p && k == 0)
        return 1;
    if (q == 0)
        return binomial(k + n - p, k) * binomial(k - 1, p);
    if (q == n)
        return binomial(-k + p, -k) * binomial(-k - 1, n - p);
    return 0;
}

Int coh_omega(const TwistedDifferential& bundle, int q) {
    return coh_omega(bundle.n, bundle.p, bundle.k, q);
}

Int coh_product(int n1, int n2, long a, long b, int q) {
    ProductLineBundle check(n1, n2, a, b);
    check_q(q, n1 + n2, "coh_product");
    Int sum = 0;
    for (int i = std::max(0, q - n2); i <= std::min(q, n1); ++i)
        sum += coh_line(n1, a, i) * coh_line(n2, b, q - i);
    return sum;
}

Int coh_product(const ProductLineBundle& bundle, int q) {
    return coh_product(bundle.n1, bundle.n2, bundle.a, bundle.b, q);
}

RowBounds line_bounds(int n, int q, long r) {
    check_q(q, n, "line_bounds");
    if (q == 0) {
        RatPoly top = binomial_poly(n, n) * Rat(r);
        return RowBounds{SupportTail{-1, RatPoly()}, SupportTail{-n, top}};
    }
    if (q == n) {
        RatPoly bottom = falling_neg(n, -1) * Rat(r); // r * binom(-k-1, n)
        return RowBounds{SupportTail{-n - 1, bottom}, SupportTail{-n, RatPoly()}};
    }
    return zero_row();
}

RowBounds omega_bounds(int n, int p, int q) {
    if (p < 0 || p > n)
        throw domain_error("omega_bounds: form degree must satisfy 0 <= p <= n");
    check_q(q, n, "omega_bounds");
    if (p == 0)
        return line_bounds(n, q, 1);
    if (q == 0) {
        // binom(k+n-p, n-p) * binom(k-1, p), the section count for k > p
        RatPoly poly = binomial_poly(n - p, n - p) * binomial_poly(p, -1);
        return RowBounds{SupportTail{p, RatPoly()}, SupportTail{p + 1, poly}};
    }
    if (q == n) {
        // binom(p-k, p) * binom(-k-1, n-p); for p == n the k = 0 value is the
        // Hodge spike, which the polynomial already hits.
        RatPoly poly = falling_neg(p, p) * falling_neg(n - p, -1);
        int lower = (p == n) ? 0 : -1;
        int upper = (p == n) ? 1 : p - n;
        return RowBounds{SupportTail{lower, poly}, SupportTail{upper, RatPoly()}};
    }
    if (q == p) {
        // single spike at k = 0
        return RowBounds{SupportTail{-1, RatPoly()}, SupportTail{1, RatPoly()}};
    }
    return zero_row();
}

RowBounds product_bounds(int n1, int n2, long a, long b, int q) {
    ProductLineBundle check(n1, n2, a, b);
    check_q(q, n1 + n2, "product_bounds");
    if (q == 0) {
        RatPoly poly = binomial_poly(n1, a + n1) * binomial_poly(n2, b + n2);
        int upper = static_cast<int>(std::max(-a - n1, -b - n2));
        int lower = static_cast<int>(std::max(-a - 1, -b - 1));
        return RowBounds{SupportTail{lower, RatPoly()}, SupportTail{upper, poly}};
    }
    if (q == n1 + n2) {
        RatPoly poly = falling_neg(n1, -a - 1) * falling_neg(n2, -b - 1);
        int lower = static_cast<int>(std::min(-a - 1, -b - 1));
        int upper = static_cast<int>(std::min(-a - n1, -b - n2));
        return RowBounds{SupportTail{lower, poly}, SupportTail{upper, RatPoly()}};
    }
    // Middle rows live on finite windows: only h^0 x h^{n2} (when q == n2)
    // and h^{n1} x h^0 (when q == n1) contribute.
    long window_lo = 1, window_hi = 0; // empty
    auto widen = [&](long lo, long hi) {
        if (lo > hi)
            return;
        if (window_lo > window_hi) {
            window_lo = lo;
            window_hi = hi;
        } else {
            window_lo = std::min(window_lo, lo);
            window_hi = std::max(window_hi, hi);
        }
    };
    if (q == n2)
        widen(-a, -b - n2 - 1);
    if (q == n1)
        widen(-b, -a - n1 - 1);
    if (window_lo > window_hi)
        return zero_row();
    return RowBounds{SupportTail{static_cast<int>(window_lo - 1), RatPoly()},
                     SupportTail{static_cast<int>(window_hi + 1), RatPoly()}};
}

RatPoly line_chi(int n, long c, long r) {
    return binomial_poly(n, c + n) * Rat(r);
}

RatPoly omega_chi(int n, int p, long c) {
    // chi(Omega^p(m)) = sum_{j=0..p} (-1)^j binom(n+1, p-j) chi(O(m-p+j))
    RatPoly chi;
    for (int j = 0; j <= p; ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        chi = chi + line_chi(n, c - p + j) * (sign * Rat(binomial(n + 1, p - j)));
    }
    return chi;
}

} // namespace sheafreg
