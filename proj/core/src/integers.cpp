#include "sheafreg/integers.hpp"

namespace sheafreg {

Int binomial(long a, long b) {
    if (b < 0 || a < b)
        return 0;
    // a >= b >= 0 here; multiply the falling factorial, dividing as we go.
    Int result = 1;
    for (long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

Int factorial(long n) {
    if (n < 0)
        throw domain_error("factorial requires a nonnegative argument, got " + std::to_string(n));
    Int result = 1;
    for (long i = 2; i <= n; ++i)
        result *= i;
    return result;
}

Int rat_to_int(const Rat& q) {
    if (denominator(q) != 1)
        throw domain_error("expected an integral value, got " + to_string(q));
    return numerator(q);
}

std::string to_string(const Int& v) {
    return v.str();
}

std::string to_string(const Rat& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace sheafreg
