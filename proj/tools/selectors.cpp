#include "selectors.hpp"

#include <map>
#include <stdexcept>

namespace cli {

using sheafreg::domain_error;
using sheafreg::VarietySpec;

namespace {

int to_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw domain_error("cannot parse integer '" + s + "' in " + what);
    }
}

} // namespace

Range parse_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos)
        throw domain_error("range must look like LO..HI, got '" + text + "'");
    Range r;
    r.lo = to_int(text.substr(0, sep), "range");
    r.hi = to_int(text.substr(sep + 2), "range");
    if (r.lo > r.hi)
        throw domain_error("empty range " + text);
    return r;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string item =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        if (item.empty())
            throw domain_error("empty entry in integer list '" + text + "'");
        out.push_back(to_int(item, "integer list"));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (out.empty())
        throw domain_error("empty integer list");
    return out;
}

VarietySpec parse_selector(const std::string& text) {
    size_t colon = text.find(':');
    std::string name = text.substr(0, colon == std::string::npos ? text.size() : colon);
    std::map<std::string, std::string> args;
    while (colon != std::string::npos) {
        size_t next = text.find(':', colon + 1);
        std::string pair = text.substr(colon + 1, next == std::string::npos ? std::string::npos
                                                                            : next - colon - 1);
        size_t eq = pair.find('=');
        if (eq == std::string::npos)
            throw domain_error("selector parameter '" + pair + "' is not key=value");
        args[pair.substr(0, eq)] = pair.substr(eq + 1);
        colon = next;
    }
    auto take = [&args](const std::string& key, const std::string& fallback) {
        auto it = args.find(key);
        if (it == args.end())
            return fallback;
        std::string v = it->second;
        args.erase(it);
        return v;
    };
    auto done = [&args, &name]() {
        if (!args.empty())
            throw domain_error("unknown parameter '" + args.begin()->first + "' for variety '" +
                               name + "'");
    };

    if (name == "palatini") {
        int t = to_int(take("t", "0"), "palatini");
        done();
        return VarietySpec::palatini(t);
    }
    if (name == "ci") {
        int N = to_int(take("N", "5"), "ci");
        std::vector<int> degrees = parse_int_list(take("degrees", "2,2"));
        done();
        return VarietySpec::complete_intersection(N, degrees);
    }
    if (name == "segre") {
        done();
        return VarietySpec::segre();
    }
    if (name == "skew-lines") {
        done();
        return VarietySpec::skew_lines();
    }
    if (name == "quadric") {
        int n = to_int(take("n", "3"), "quadric");
        int rank = to_int(take("rank", "4"), "quadric");
        if (rank == 4) {
            int a = to_int(take("a", "2"), "quadric");
            int b = to_int(take("b", "1"), "quadric");
            done();
            return VarietySpec::quadric_divisor(sheafreg::QuadricDivisorSpec::rank4(n, a, b));
        }
        if (rank == 3) {
            int s = to_int(take("s", "3"), "quadric");
            done();
            return VarietySpec::quadric_divisor(sheafreg::QuadricDivisorSpec::rank3(n, s));
        }
        throw domain_error("quadric rank must be 3 or 4");
    }
    throw domain_error("unknown variety '" + name +
                       "' (known: palatini, ci, segre, quadric, skew-lines)");
}

sheafreg::IntPoly parse_twist(const std::string& text) {
    // constant + optional [+-] coefficient 't'
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '*')
            s += c;
    if (s.empty())
        throw domain_error("empty twist expression");
    auto parse_term = [](const std::string& term, sheafreg::Int& constant, sheafreg::Int& slope) {
        if (term.empty())
            throw domain_error("empty term in twist expression");
        if (term.back() == 't') {
            std::string coeff = term.substr(0, term.size() - 1);
            if (coeff.empty() || coeff == "+")
                slope += 1;
            else if (coeff == "-")
                slope -= 1;
            else
                slope += sheafreg::Int(coeff);
        } else {
            constant += sheafreg::Int(term);
        }
    };
    try {
        sheafreg::Int constant = 0, slope = 0;
        size_t start = 0;
        for (size_t i = 1; i <= s.size(); ++i) {
            if (i == s.size() || s[i] == '+' || s[i] == '-') {
                parse_term(s.substr(start, i - start), constant, slope);
                start = (i < s.size() && s[i] == '+') ? i + 1 : i;
            }
        }
        return sheafreg::IntPoly({constant, slope});
    } catch (const domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw domain_error("cannot parse twist expression '" + text + "'");
    }
}

} // namespace cli
