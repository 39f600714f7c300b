#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace tutteforge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sparse bivariate polynomial over arbitrary-precision integers.
// Terms are kept in canonical order: x-exponent descending, then y-exponent
// ascending, which is also the order used by render().
class BiPoly {
public:
    struct TermOrder {
        bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        }
    };
    using TermMap = std::map<std::pair<int, int>, Int, TermOrder>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(Int c);
    static BiPoly one() { return constant(1); }
    static BiPoly x() { return monomial(1, 0, 1); }
    static BiPoly y() { return monomial(0, 1, 1); }
    static BiPoly monomial(int xe, int ye, Int c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Int coefficient(int xe, int ye) const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly operator+(const BiPoly& rhs) const;
    BiPoly operator-(const BiPoly& rhs) const;
    BiPoly operator*(const BiPoly& rhs) const;
    BiPoly operator-() const;
    bool operator==(const BiPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const BiPoly& rhs) const { return !(*this == rhs); }

    // Multiply by x^a * y^b.
    BiPoly shifted(int a, int b) const;
    BiPoly scaled(const Int& c) const;

    // Largest r such that y^r divides the polynomial (0 for the zero poly).
    int y_factor_order() const;

    Rational evaluate(const Rational& x0, const Rational& y0) const;

    // Canonical text form, e.g. "x^2 + x + y"; parse() inverts it and also
    // accepts terms in any order. Malformed input raises ParseError.
    std::string render() const;
    static BiPoly parse(std::string_view text);

private:
    void add_term(int xe, int ye, const Int& c);
    TermMap terms_;
};

BiPoly pow(const BiPoly& base, int exp);

}  // namespace tutteforge
