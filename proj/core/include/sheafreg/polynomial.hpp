#pragma once

#include "sheafreg/integers.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace sheafreg {

/// Dense univariate polynomial with exact coefficients. Used both for
/// integer polynomials in a family parameter t (Chern classes of X_t) and
/// for rational polynomials in a twist k (Hilbert polynomials, support
/// tails of cohomology tables).
template <typename T>
class Polynomial {
  public:
    Polynomial() = default;

    // coefficients[i] multiplies x^i
    explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

    static Polynomial constant(T v) { return Polynomial({std::move(v)}); }

    static Polynomial monomial(T coeff, int deg) {
        std::vector<T> c(static_cast<size_t>(deg) + 1, T(0));
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }

    static Polynomial variable() { return monomial(T(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for the zero polynomial

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return T(0);
        return c_[static_cast<size_t>(i)];
    }

    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i)
            r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i)
            r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r)
            v = -v;
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero())
            return Polynomial();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const T& s) const {
        std::vector<T> r(c_);
        for (auto& v : r)
            v *= s;
        return Polynomial(std::move(r));
    }

    /// p(x + a)
    Polynomial shifted(const T& a) const {
        Polynomial x_plus_a({a, T(1)});
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x_plus_a + constant(*it);
        return acc;
    }

    /// p(x) - p(x - 1)
    Polynomial backward_difference() const { return *this - shifted(T(-1)); }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str(const std::string& var) const {
        using sheafreg::to_string;
        if (is_zero())
            return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            T v = coeff(i);
            if (v == 0)
                continue;
            bool negative = v < 0;
            T mag = negative ? T(-v) : v;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            bool unit = (mag == 1) && i > 0;
            if (!unit)
                out += to_string(mag);
            if (i > 0) {
                if (!unit)
                    out += "*";
                out += var;
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

/// binom(k + shift, n) as a polynomial in k:  prod_{j=1..n} (k + shift - n + j) / n!
RatPoly binomial_poly(int n, long shift);

RatPoly to_rational(const IntPoly& p);

/// Evaluates a rational polynomial at an integer point; the result must be
/// integral (it counts a dimension).
Int eval_int(const RatPoly& p, long k);

} // namespace sheafreg
