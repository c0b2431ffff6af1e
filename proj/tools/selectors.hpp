#pragma once

#include "sheafreg/catalog.hpp"
#include "sheafreg/polynomial.hpp"

#include <string>
#include <vector>

namespace cli {

struct Range {
    int lo = 0;
    int hi = 0;
};

/// "LO..HI"
Range parse_range(const std::string& text);

/// "2,3,4"
std::vector<int> parse_int_list(const std::string& text);

/// Catalog selector: a name, optionally with parameters, e.g.
/// "palatini:t=1", "ci:N=5:degrees=2,2", "quadric:n=3:rank=4:a=3:b=2",
/// "quadric:n=2:rank=3:s=5", "segre", "skew-lines".
sheafreg::VarietySpec parse_selector(const std::string& text);

/// Twist expressions in the family parameter: "2", "t", "2+t", "3-2t",
/// "2+1*t".
sheafreg::IntPoly parse_twist(const std::string& text);

} // namespace cli
