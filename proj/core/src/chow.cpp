#include "sheafreg/chow.hpp"

namespace sheafreg {

ChowClass::ChowClass(int N) : N_(N), c_(static_cast<size_t>(N) + 1) {
    if (N < 0)
        throw domain_error("Chow ring requires ambient dimension N >= 0");
}

ChowClass ChowClass::one(int N) {
    ChowClass c(N);
    c.c_[0] = IntPoly::constant(1);
    return c;
}

const IntPoly& ChowClass::coeff(int i) const {
    static const IntPoly kZero;
    if (i < 0 || i > N_)
        return kZero;
    return c_[static_cast<size_t>(i)];
}

void ChowClass::set_coeff(int i, IntPoly c) {
    if (i < 0 || i > N_)
        return; // truncation: classes beyond h^N are discarded
    c_[static_cast<size_t>(i)] = std::move(c);
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    if (N_ != o.N_)
        throw domain_error("Chow class addition requires equal ambient dimensions");
    ChowClass r(N_);
    for (int i = 0; i <= N_; ++i)
        r.c_[static_cast<size_t>(i)] = coeff(i) + o.coeff(i);
    return r;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
    if (N_ != o.N_)
        throw domain_error("Chow class multiplication requires equal ambient dimensions");
    ChowClass r(N_);
    for (int i = 0; i <= N_; ++i)
        for (int j = 0; i + j <= N_; ++j)
            r.c_[static_cast<size_t>(i + j)] = r.coeff(i + j) + coeff(i) * o.coeff(j);
    return r;
}

ChowClass ChowClass::scaled(const IntPoly& s) const {
    ChowClass r(N_);
    for (int i = 0; i <= N_; ++i)
        r.c_[static_cast<size_t>(i)] = coeff(i) * s;
    return r;
}

ChowClass ChowClass::specialized(const Int& t) const {
    ChowClass r(N_);
    for (int i = 0; i <= N_; ++i)
        r.c_[static_cast<size_t>(i)] = IntPoly::constant(coeff(i).eval(t));
    return r;
}

std::string ChowClass::str() const {
    std::string out;
    for (int i = 0; i <= N_; ++i) {
        if (coeff(i).is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        bool atom = coeff(i).degree() <= 0;
        std::string c = coeff(i).str("t");
        if (i == 0) {
            out += c;
        } else {
            if (c == "1")
                c.clear();
            else if (!atom)
                c = "(" + c + ")";
            out += c.empty() ? "" : c + "*";
            out += "h";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

BundleChernData::BundleChernData(long rank_, ChowClass total_)
    : rank(rank_), total(std::move(total_)) {
    if (rank < 1)
        throw domain_error("bundle Chern data requires rank >= 1");
    if (total.coeff(0) != IntPoly::constant(1))
        throw domain_error("total Chern class must have constant term 1");
    for (int i = static_cast<int>(rank) + 1; i <= total.ambient(); ++i)
        if (!total.coeff(i).is_zero())
            throw domain_error("Chern classes above the rank must vanish (c_" +
                               std::to_string(i) + " != 0)");
}

BundleChernData chern_twist(const BundleChernData& data, const IntPoly& twist_degree) {
    const int N = data.total.ambient();
    ChowClass out(N);
    for (int k = 0; k <= N; ++k) {
        IntPoly ck;
        IntPoly lpow = IntPoly::constant(1);
        // walk i = k down to 0 so the running power is L^{k-i}
        for (int i = k; i >= 0; --i) {
            ck = ck + data.chern(i) * lpow * IntPoly::constant(binomial(data.rank - i, k - i));
            lpow = lpow * twist_degree;
        }
        out.set_coeff(k, ck);
    }
    return BundleChernData(data.rank, out);
}

BundleChernData chern_twist(const BundleChernData& data, long twist_degree) {
    return chern_twist(data, IntPoly::constant(twist_degree));
}

BundleChernData chern_of_omega(int n) {
    if (n < 1)
        throw domain_error("chern_of_omega requires n >= 1");
    ChowClass one_minus_h = ChowClass::one(n);
    one_minus_h.set_coeff(1, IntPoly::constant(-1));
    ChowClass total = ChowClass::one(n);
    for (int i = 0; i < n + 1; ++i)
        total = total * one_minus_h;
    return BundleChernData(n, total);
}

BundleChernData whitney_sum(const std::vector<BundleChernData>& operands) {
    if (operands.empty())
        throw domain_error("whitney_sum requires at least one operand");
    long rank = 0;
    ChowClass total = ChowClass::one(operands.front().total.ambient());
    for (const auto& op : operands) {
        rank += op.rank;
        total = total * op.total;
    }
    return BundleChernData(rank, total);
}

BundleChernData dual(const BundleChernData& data) {
    ChowClass total(data.total.ambient());
    for (int i = 0; i <= data.total.ambient(); ++i) {
        IntPoly c = data.chern(i);
        total.set_coeff(i, (i % 2 == 0) ? c : -c);
    }
    return BundleChernData(data.rank, total);
}

BundleChernData split_bundle(int N, const std::vector<IntPoly>& degrees) {
    if (degrees.empty())
        throw domain_error("split bundle requires at least one summand");
    ChowClass total = ChowClass::one(N);
    for (const auto& d : degrees) {
        ChowClass factor = ChowClass::one(N);
        factor.set_coeff(1, d);
        total = total * factor;
    }
    return BundleChernData(static_cast<long>(degrees.size()), total);
}

BundleChernData split_bundle_const(int N, const std::vector<long>& degrees) {
    std::vector<IntPoly> d;
    d.reserve(degrees.size());
    for (long a : degrees)
        d.push_back(IntPoly::constant(a));
    return split_bundle(N, d);
}

IntPoly dependency_locus_degree(const BundleChernData& data) {
    if (data.total.ambient() < 2)
        throw domain_error("dependency locus needs ambient dimension >= 2");
    IntPoly c2 = data.chern(2);
    if (c2.is_zero())
        throw domain_error("dependency locus class vanishes identically (degenerate locus)");
    return c2;
}

} // namespace sheafreg
