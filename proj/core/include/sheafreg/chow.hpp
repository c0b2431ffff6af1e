#pragma once

#include "sheafreg/polynomial.hpp"

#include <string>
#include <vector>

namespace sheafreg {

/// Truncated class sum c_0 + c_1 h + ... + c_N h^N in the Chow ring
/// Z[h]/(h^{N+1}) of P^N. Coefficients are integer polynomials in one
/// formal family parameter t, so a whole family like X_t is one value.
class ChowClass {
  public:
    explicit ChowClass(int N);

    static ChowClass one(int N);

    int ambient() const { return N_; }

    const IntPoly& coeff(int i) const;
    void set_coeff(int i, IntPoly c);

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator*(const ChowClass& o) const; // truncates beyond h^N
    ChowClass scaled(const IntPoly& s) const;

    /// Substitutes an integer value for the family parameter.
    ChowClass specialized(const Int& t) const;

    bool operator==(const ChowClass& o) const { return N_ == o.N_ && c_ == o.c_; }

    std::string str() const;

  private:
    int N_;
    std::vector<IntPoly> c_;
};

/// Rank plus total Chern class of a vector bundle on P^N.
struct BundleChernData {
    long rank;
    ChowClass total;

    BundleChernData(long rank, ChowClass total);

    const IntPoly& chern(int i) const { return total.coeff(i); }
};

/// c_k(E (x) L) = sum_{i<=k} binom(r-i, k-i) c_i(E) c_1(L)^{k-i}; the twist
/// degree may carry the family parameter (e.g. 2 + t).
BundleChernData chern_twist(const BundleChernData& data, const IntPoly& twist_degree);
BundleChernData chern_twist(const BundleChernData& data, long twist_degree);

/// Cotangent bundle of P^n: total class (1 - h)^{n+1} truncated, rank n.
BundleChernData chern_of_omega(int n);

/// Whitney sum: total class of a direct sum is the product of total classes.
BundleChernData whitney_sum(const std::vector<BundleChernData>& operands);

/// Dual bundle: odd-degree parts change sign.
BundleChernData dual(const BundleChernData& data);

/// Split bundle O(a_1) + ... + O(a_r) on P^N.
BundleChernData split_bundle(int N, const std::vector<IntPoly>& degrees);
BundleChernData split_bundle_const(int N, const std::vector<long>& degrees);

/// Degree of the codimension-2 dependency locus of a generic morphism with
/// one-dimensional rank drop: the h^2 coefficient of the given total class.
/// Throws when that class vanishes identically (degenerate locus).
IntPoly dependency_locus_degree(const BundleChernData& data);

} // namespace sheafreg
