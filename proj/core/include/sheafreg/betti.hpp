#pragma once

#include "sheafreg/polynomial.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sheafreg {

/// Graded Betti numbers beta_{i,j} of a finite free resolution of a
/// homogeneous ideal over S = C[x_0..x_N]. Homological index i = 0 lists
/// the minimal generators of the ideal.
class BettiTable {
  public:
    explicit BettiTable(int N);

    int ambient() const { return N_; }

    void add(int i, int j, Int count);
    Int entry(int i, int j) const;

    /// Nonzero entries, keyed by (homological index, internal degree).
    const std::map<std::pair<int, int>, Int>& entries() const { return beta_; }

    int max_homological_index() const;
    int max_internal_degree() const;
    bool empty() const { return beta_.empty(); }

  private:
    int N_;
    std::map<std::pair<int, int>, Int> beta_;
};

/// Koszul resolution of the ideal of a complete intersection of
/// hypersurfaces of the given degrees: beta_{i,j} counts the size-(i+1)
/// subsets of the degree list with sum j.
BettiTable koszul(int N, const std::vector<int>& degrees);

/// max(j - i) over the nonzero entries; with the ideal convention this is
/// the Castelnuovo-Mumford regularity of the resolved subscheme.
int regularity_of_table(const BettiTable& t);

/// Dimension of the degree-k graded piece of the resolved ideal:
/// sum_i (-1)^i sum_j beta_{i,j} binom(k - j + N, N). Negative values mean
/// the table is not exact and raise an error.
Int hilbert_function(const BettiTable& t, long k);

/// The same alternating sum with the binomials as polynomials in k; agrees
/// with hilbert_function for k >= regularity_of_table(t) - 1.
RatPoly hilbert_polynomial(const BettiTable& t);

/// Hilbert polynomial of the subscheme itself: binom(k+N, N) minus the
/// ideal polynomial.
RatPoly variety_polynomial(const BettiTable& t);

struct DegreeGenus {
    Int degree;
    Int sectional_genus;
};

/// Reads degree (n! times the leading coefficient) and sectional genus
/// (1 - P_C(0), where P_C is the (n-1)-fold backward difference) off a
/// variety Hilbert polynomial of degree n.
DegreeGenus degree_and_sectional_genus(const RatPoly& variety_poly, int dim);

/// Graded vector-space dimensions with a finite support certificate:
/// zero for k <= zero_below and for k >= zero_above.
struct GradedDims {
    std::map<int, Int> values;
    int zero_below = -1;
    int zero_above = 0;

    Int at(int k) const;
    bool is_zero() const { return values.empty(); }
};

} // namespace sheafreg
