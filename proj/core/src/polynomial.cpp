#include "sheafreg/polynomial.hpp"

namespace sheafreg {

RatPoly binomial_poly(int n, long shift) {
    // (k + shift)(k + shift - 1) ... (k + shift - n + 1) / n!
    RatPoly p = RatPoly::constant(Rat(1));
    for (int j = 0; j < n; ++j)
        p = p * RatPoly({Rat(shift - j), Rat(1)});
    return p * Rat(Int(1), factorial(n));
}

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i)
        c[static_cast<size_t>(i)] = Rat(p.coeff(i));
    return RatPoly(std::move(c));
}

Int eval_int(const RatPoly& p, long k) {
    return rat_to_int(p.eval(Rat(k)));
}

} // namespace sheafreg
