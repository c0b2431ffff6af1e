#pragma once

#include "sheafreg/cohtable.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sheafreg {

/// Affine form c0 + c1*d in a formal degree parameter d, with exact
/// rational coefficients. Regularity bounds stay symbolic in the degree so
/// extremal questions become solvable inequalities on integer rays.
struct AffineForm {
    Rat c0;
    Rat c1;

    static AffineForm constant(long v) { return {Rat(v), Rat(0)}; }
    static AffineForm degree() { return {Rat(0), Rat(1)}; }

    AffineForm operator+(const AffineForm& o) const { return {c0 + o.c0, c1 + o.c1}; }
    AffineForm operator-(const AffineForm& o) const { return {c0 - o.c0, c1 - o.c1}; }
    AffineForm scaled(const Rat& s) const { return {c0 * s, c1 * s}; }

    Rat eval(const Rat& d) const { return c0 + c1 * d; }

    bool operator==(const AffineForm& o) const { return c0 == o.c0 && c1 == o.c1; }

    std::string str(const std::string& var = "d") const;
};

/// f(d) < g(d) for every integer d >= d_from.
bool strictly_below_on_ray(const AffineForm& f, const AffineForm& g, long d_from);

/// f(d) <= g(d) for every integer d >= d_from.
bool below_or_equal_on_ray(const AffineForm& f, const AffineForm& g, long d_from);

/// The integers d >= d_from with f(d) = g(d); nullopt when f == g (all of
/// the ray).
std::optional<std::vector<long>> equality_points_on_ray(const AffineForm& f, const AffineForm& g,
                                                        long d_from);

/// Symbolic term built from named bundle atoms by tensor, symmetric and
/// exterior powers, twists and determinants. Each atom carries a rank and a
/// declared regularity bound, affine in the degree parameter.
class RegTerm {
  public:
    static RegTerm atom(std::string name, Int rank, AffineForm bound);
    static RegTerm tensor(RegTerm a, RegTerm b);
    static RegTerm sym(long k, RegTerm a);
    static RegTerm wedge(long k, RegTerm a);
    static RegTerm twisted(long j, RegTerm a);
    static RegTerm det(RegTerm a);

    Int rank() const;
    std::string str() const;

    /// Regularity bound of the term: tensors add bounds, k-th symmetric and
    /// exterior powers scale by k, a twist by j subtracts j, a determinant
    /// of a rank-r term scales by r.
    AffineForm bound() const;

  private:
    struct Node;
    explicit RegTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline AffineForm propagate_bound(const RegTerm& term) { return term.bound(); }

enum class BoundSetting { ThreefoldInP5, RegularSurfaceInP4 };

/// Regularity bound chain through a generic projection to a hyperplane:
/// the kernel bundle E of the evaluation of the pushforward satisfies
/// reg(X) <= reg(E), E is isomorphic to wedge^{r-1}(E^*) (x) det(E), and
/// the dual kernel is (-3)-regular granted the named vanishing axioms.
/// Both settings yield the bound d - 3.
struct BoundChain {
    BoundSetting setting;
    RegTerm term;
    AffineForm bound;
    std::vector<std::string> axioms;
    std::vector<std::string> notes;
};

BoundChain projection_bound_chain(BoundSetting setting);

const char* setting_name(BoundSetting setting);

/// Result of scanning an ideal-sheaf cohomology table.
struct RegScanResult {
    int reg = 0;
    /// Least k0 with h^1(I(k)) = 0 for all k >= k0; empty when h^1 never
    /// obstructs (arithmetically Cohen-Macaulay entries).
    std::optional<int> first_normal_from;
    /// Rows blocking (reg-1)-regularity: pairs (i, k) with h^i(I(k)) != 0.
    std::vector<std::pair<int, int>> failures;
};

/// reg = least m such that h^i(I(m-i)) = 0 for all i >= 1 *and* the
/// support bounds certify vanishing for every larger m. Requires exact
/// values and two-sided support bounds on rows 1..dim_x+1; an ambiguous
/// interval met while certifying raises domain_error.
RegScanResult regularity_scan(const CohTable& table, int dim_x);

} // namespace sheafreg
