#include "sheafreg/betti.hpp"

#include <algorithm>
#include <limits>

namespace sheafreg {

BettiTable::BettiTable(int N) : N_(N) {
    if (N < 1)
        throw domain_error("Betti table requires ambient dimension N >= 1");
}

void BettiTable::add(int i, int j, Int count) {
    if (i < 0)
        throw domain_error("Betti table: homological index must be nonnegative");
    if (count < 0)
        throw domain_error("Betti table: entries must be nonnegative");
    if (count == 0)
        return;
    beta_[{i, j}] += count;
}

Int BettiTable::entry(int i, int j) const {
    auto it = beta_.find({i, j});
    return it == beta_.end() ? Int(0) : it->second;
}

int BettiTable::max_homological_index() const {
    int m = 0;
    for (const auto& [key, v] : beta_)
        m = std::max(m, key.first);
    return m;
}

int BettiTable::max_internal_degree() const {
    int m = 0;
    for (const auto& [key, v] : beta_)
        m = std::max(m, key.second);
    return m;
}

BettiTable koszul(int N, const std::vector<int>& degrees) {
    const int e = static_cast<int>(degrees.size());
    if (e < 1)
        throw domain_error("koszul: at least one hypersurface degree is required");
    if (e > N)
        throw domain_error("koszul: " + std::to_string(e) + " hypersurfaces exceed the ambient dimension N=" +
                           std::to_string(N) + " (need e <= N)");
    for (int d : degrees)
        if (d < 1)
            throw domain_error("koszul: hypersurface degrees must be positive");
    if (e > 30)
        throw domain_error("koszul: too many hypersurfaces");
    BettiTable t(N);
    for (unsigned long mask = 1; mask < (1ul << e); ++mask) {
        int size = 0, sum = 0;
        for (int s = 0; s < e; ++s)
            if (mask & (1ul << s)) {
                ++size;
                sum += degrees[static_cast<size_t>(s)];
            }
        t.add(size - 1, sum, 1);
    }
    return t;
}

int regularity_of_table(const BettiTable& t) {
    if (t.empty())
        throw domain_error("regularity of an empty Betti table is undefined");
    int reg = std::numeric_limits<int>::min();
    for (const auto& [key, v] : t.entries())
        reg = std::max(reg, key.second - key.first);
    return reg;
}

Int hilbert_function(const BettiTable& t, long k) {
    Int sum = 0;
    for (const auto& [key, v] : t.entries()) {
        Int term = v * binomial(k - key.second + t.ambient(), t.ambient());
        sum += (key.first % 2 == 0) ? term : -term;
    }
    if (sum < 0)
        throw domain_error("Betti table is not exact: negative Hilbert value at k=" +
                           std::to_string(k));
    return sum;
}

RatPoly hilbert_polynomial(const BettiTable& t) {
    RatPoly p;
    for (const auto& [key, v] : t.entries()) {
        RatPoly term = binomial_poly(t.ambient(), t.ambient() - key.second) * Rat(v);
        p = (key.first % 2 == 0) ? p + term : p - term;
    }
    return p;
}

RatPoly variety_polynomial(const BettiTable& t) {
    return binomial_poly(t.ambient(), t.ambient()) - hilbert_polynomial(t);
}

DegreeGenus degree_and_sectional_genus(const RatPoly& variety_poly, int dim) {
    if (variety_poly.degree() != dim)
        throw domain_error("Hilbert polynomial has degree " + std::to_string(variety_poly.degree()) +
                           ", expected the variety dimension " + std::to_string(dim));
    DegreeGenus out;
    out.degree = rat_to_int(variety_poly.leading() * Rat(factorial(dim)));
    RatPoly curve = variety_poly;
    for (int i = 0; i < dim - 1; ++i)
        curve = curve.backward_difference();
    out.sectional_genus = rat_to_int(Rat(1) - curve.eval(Rat(0)));
    return out;
}

Int GradedDims::at(int k) const {
    if (k <= zero_below || k >= zero_above)
        return 0;
    auto it = values.find(k);
    return it == values.end() ? Int(0) : it->second;
}

} // namespace sheafreg
