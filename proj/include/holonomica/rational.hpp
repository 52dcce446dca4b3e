#ifndef HOLONOMICA_RATIONAL_HPP
#define HOLONOMICA_RATIONAL_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "holonomica/errors.hpp"

namespace holonomica {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd(|num|, den) = 1 and den > 0 after every operation.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

inline std::string rat_to_string(const Rat& r) {
    if (rat_is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rat parse_rat(const std::string& s) {
    std::size_t i = 0, n = s.size();
    auto fail = [&]() -> Rat { throw input_error("bad rational: '" + s + "'"); };
    while (i < n && s[i] == ' ') ++i;
    bool neg = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return fail();
    Int num(s.substr(start, i - start));
    Int den = 1;
    while (i < n && s[i] == ' ') ++i;
    if (i < n && s[i] == '/') {
        ++i;
        while (i < n && s[i] == ' ') ++i;
        start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) return fail();
        den = Int(s.substr(start, i - start));
        if (den == 0) return fail();
    }
    while (i < n && s[i] == ' ') ++i;
    if (i != n) return fail();
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

// Element of Q(i), component-wise canonical.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}          // NOLINT(google-explicit-constructor)
    GaussRat(int v) : re(v) {}                     // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm() const { return re * re + im * im; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.norm();
        if (n == 0) throw precondition_error("DIVISION_BY_ZERO", "Gaussian rational division by zero");
        GaussRat p = a * b.conj();
        return GaussRat(p.re / n, p.im / n);
    }
    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
    GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline std::string gauss_to_string(const GaussRat& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::string s = rat_to_string(g.re);
    if (g.im > 0)
        s += "+" + rat_to_string(g.im) + "*i";
    else
        s += "-" + rat_to_string(Rat(-g.im)) + "*i";
    return s;
}

// Accepts "a/b", "a/b+c/d*i", "a/b-c/d*i", "i", "-i", "c*i", "ci".
inline GaussRat parse_gauss(const std::string& s) {
    auto fail = [&]() -> GaussRat { throw input_error("bad Gaussian rational: '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.empty()) return fail();
    // Split on the last top-level sign that is not leading.
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '+' && t[i - 1] != '-') {
            split = i;
            break;
        }
    }
    auto parse_part = [&](const std::string& part, bool* imag) -> Rat {
        std::string body = part;
        *imag = false;
        if (!body.empty() && body.back() == 'i') {
            *imag = true;
            body.pop_back();
            if (!body.empty() && body.back() == '*') body.pop_back();
            if (body.empty() || body == "+") return Rat(1);
            if (body == "-") return Rat(-1);
        }
        return parse_rat(body);
    };
    bool im1 = false, im2 = false;
    if (split == std::string::npos) {
        Rat v = parse_part(t, &im1);
        return im1 ? GaussRat(Rat(0), v) : GaussRat(v);
    }
    Rat a = parse_part(t.substr(0, split), &im1);
    Rat b = parse_part(t.substr(split), &im2);
    if (im1 == im2) return fail();
    if (im1) std::swap(a, b);
    return GaussRat(a, b);
}

// The rational components of a coefficient, used for content/primitive
// normalization of polynomial lists.
inline std::vector<Rat> coeff_components(const Rat& r) { return {r}; }
inline std::vector<Rat> coeff_components(const GaussRat& g) { return {g.re, g.im}; }

inline bool coeff_is_zero(const Rat& r) { return r == 0; }
inline bool coeff_is_zero(const GaussRat& g) { return g.is_zero(); }

inline Rat coeff_mul_rat(const Rat& c, const Rat& s) { return c * s; }
inline GaussRat coeff_mul_rat(const GaussRat& c, const Rat& s) {
    return GaussRat(c.re * s, c.im * s);
}

inline std::string coeff_to_string(const Rat& r) { return rat_to_string(r); }
inline std::string coeff_to_string(const GaussRat& g) { return gauss_to_string(g); }

} // namespace holonomica

#endif
