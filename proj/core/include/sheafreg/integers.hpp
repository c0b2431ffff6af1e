#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sheafreg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Violated precondition or inconsistent input data. The CLI maps these to
/// exit code 1 with the message passed through unchanged.
class domain_error : public std::runtime_error {
  public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// binom(a, b), with binom(a, b) = 0 whenever b < 0 or a < b. The zero
/// convention makes every cohomology branch formula a single expression,
/// valid for all twists.
Int binomial(long a, long b);

Int factorial(long n);

/// Converts a rational known to be integral; throws domain_error otherwise.
Int rat_to_int(const Rat& q);

std::string to_string(const Int& v);
std::string to_string(const Rat& q);

} // namespace sheafreg
