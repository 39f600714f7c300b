#include "tutteforge/bipoly.hpp"

#include "tutteforge/error.hpp"

#include <cctype>
#include <sstream>

namespace tutteforge {

BiPoly BiPoly::constant(Int c) {
    BiPoly p;
    p.add_term(0, 0, c);
    return p;
}

BiPoly BiPoly::monomial(int xe, int ye, Int c) {
    BiPoly p;
    p.add_term(xe, ye, c);
    return p;
}

Int BiPoly::coefficient(int xe, int ye) const {
    auto it = terms_.find({xe, ye});
    return it == terms_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(int xe, int ye, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({xe, ye}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
    BiPoly out = *this;
    out += rhs;
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& rhs) const {
    BiPoly out = *this;
    out -= rhs;
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
    BiPoly out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

BiPoly BiPoly::shifted(int a, int b) const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(std::pair{k.first + a, k.second + b}, c);
    return out;
}

BiPoly BiPoly::scaled(const Int& c) const {
    BiPoly out;
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

int BiPoly::y_factor_order() const {
    if (terms_.empty()) return 0;
    int best = INT32_MAX;
    for (const auto& [k, c] : terms_) best = std::min(best, k.second);
    return best;
}

namespace {

Int int_pow(const Int& b, int e) {
    Int r = 1;
    for (int i = 0; i < e; i++) r *= b;
    return r;
}

Rational rat_pow(const Rational& b, int e) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return Rational(int_pow(numerator(b), e), int_pow(denominator(b), e));
}

}  // namespace

Rational BiPoly::evaluate(const Rational& x0, const Rational& y0) const {
    Rational acc = 0;
    for (const auto& [k, c] : terms_)
        acc += Rational(c) * rat_pow(x0, k.first) * rat_pow(y0, k.second);
    return acc;
}

BiPoly pow(const BiPoly& base, int exp) {
    BiPoly out = BiPoly::one();
    for (int i = 0; i < exp; i++) out = out * base;
    return out;
}

std::string BiPoly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = k.first > 0 || k.second > 0;
        bool coef_shown = !has_var || mag != 1;
        if (coef_shown) os << mag;
        if (k.first > 0) {
            if (coef_shown) os << "*";
            os << "x";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            if (coef_shown || k.first > 0) os << "*";
            os << "y";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
        if (pos == start) fail("expected integer");
        return Int(std::string(s.substr(start, pos - start)));
    }

    int parse_exponent() {
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            pos++;
            Int e = parse_integer();
            if (e > 100000) fail("exponent too large");
            return static_cast<int>(e);
        }
        return 1;
    }

    // factor := integer | 'x'['^' int] | 'y'['^' int]
    // term   := factor ('*' factor)*
    void parse_term(Int& coef, int& xe, int& ye) {
        coef = 1;
        xe = ye = 0;
        while (true) {
            skip_ws();
            if (pos >= s.size()) fail("expected term");
            char c = s[pos];
            if (c == 'x') {
                pos++;
                xe += parse_exponent();
            } else if (c == 'y') {
                pos++;
                ye += parse_exponent();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= parse_integer();
            } else {
                fail("expected factor");
            }
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                pos++;
                continue;
            }
            break;
        }
    }

    BiPoly parse_poly() {
        BiPoly out;
        skip_ws();
        bool negative = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            negative = s[pos] == '-';
            pos++;
        }
        while (true) {
            Int coef;
            int xe, ye;
            parse_term(coef, xe, ye);
            out += BiPoly::monomial(xe, ye, negative ? -coef : coef);
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+' || s[pos] == '-') {
                negative = s[pos] == '-';
                pos++;
            } else {
                fail("expected '+' or '-'");
            }
        }
        return out;
    }
};

}  // namespace

BiPoly BiPoly::parse(std::string_view text) {
    Parser p{text};
    if (p.done()) throw ParseError("empty input", 0);
    return p.parse_poly();
}

}  // namespace tutteforge
