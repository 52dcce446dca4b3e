#ifndef HOLONOMICA_SERIES_HPP
#define HOLONOMICA_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "holonomica/quad.hpp"

namespace holonomica {

// Truncated power series over Q(i): coefficients a_0..a_{T-1}, arithmetic
// never reads beyond T.
struct TruncSeries {
    std::vector<GaussRat> a;

    TruncSeries() = default;
    explicit TruncSeries(std::size_t T) : a(T) {}
    explicit TruncSeries(std::vector<GaussRat> coeffs) : a(std::move(coeffs)) {}

    std::size_t T() const { return a.size(); }
    GaussRat coeff(std::size_t n) const { return n < a.size() ? a[n] : GaussRat(0); }

    bool all_zero() const {
        return std::all_of(a.begin(), a.end(), [](const GaussRat& c) { return c.is_zero(); });
    }

    TruncSeries truncated(std::size_t T) const {
        TruncSeries r = *this;
        if (r.a.size() > T) r.a.resize(T);
        return r;
    }

    friend bool operator==(const TruncSeries& s, const TruncSeries& t) { return s.a == t.a; }
    friend bool operator!=(const TruncSeries& s, const TruncSeries& t) { return !(s == t); }
};

inline TruncSeries ts_zero(std::size_t T) { return TruncSeries(T); }

inline TruncSeries ts_one(std::size_t T) {
    TruncSeries s(T);
    if (T > 0) s.a[0] = GaussRat(1);
    return s;
}

// Mixed truncations auto-truncate to the minimum; the result records the
// effective order.
inline TruncSeries ts_add(const TruncSeries& s, const TruncSeries& t) {
    std::size_t T = std::min(s.T(), t.T());
    TruncSeries r(T);
    for (std::size_t i = 0; i < T; ++i) r.a[i] = s.a[i] + t.a[i];
    return r;
}

inline TruncSeries ts_sub(const TruncSeries& s, const TruncSeries& t) {
    std::size_t T = std::min(s.T(), t.T());
    TruncSeries r(T);
    for (std::size_t i = 0; i < T; ++i) r.a[i] = s.a[i] - t.a[i];
    return r;
}

inline TruncSeries ts_neg(const TruncSeries& s) {
    TruncSeries r(s.T());
    for (std::size_t i = 0; i < s.T(); ++i) r.a[i] = -s.a[i];
    return r;
}

inline TruncSeries ts_scale(const TruncSeries& s, const GaussRat& c) {
    TruncSeries r(s.T());
    for (std::size_t i = 0; i < s.T(); ++i) r.a[i] = s.a[i] * c;
    return r;
}

inline TruncSeries ts_mul(const TruncSeries& s, const TruncSeries& t) {
    std::size_t T = std::min(s.T(), t.T());
    TruncSeries r(T);
    for (std::size_t i = 0; i < T; ++i) {
        if (s.a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < T; ++j) {
            if (t.a[j].is_zero()) continue;
            r.a[i + j] += s.a[i] * t.a[j];
        }
    }
    return r;
}

// Derivative; one order of knowledge is lost at the top.
inline TruncSeries ts_derivative(const TruncSeries& s) {
    if (s.T() == 0) return s;
    TruncSeries r(s.T() - 1);
    for (std::size_t i = 1; i < s.T(); ++i) r.a[i - 1] = s.a[i] * GaussRat(Rat(Int(i)));
    return r;
}

// Multiplicative inverse; requires a nonzero constant term.
inline TruncSeries ts_inverse(const TruncSeries& s) {
    if (s.T() == 0 || s.a[0].is_zero())
        throw precondition_error("NOT_INVERTIBLE_SERIES",
                                 "series inverse requires a nonzero constant term");
    TruncSeries r(s.T());
    GaussRat inv0 = GaussRat(1) / s.a[0];
    r.a[0] = inv0;
    for (std::size_t n = 1; n < s.T(); ++n) {
        GaussRat acc(0);
        for (std::size_t j = 1; j <= n; ++j) acc += s.coeff(j) * r.a[n - j];
        r.a[n] = -acc * inv0;
    }
    return r;
}

// exp of a series with zero constant term, via E' = s' E.
inline TruncSeries ts_exp(const TruncSeries& s) {
    if (s.T() > 0 && !s.a[0].is_zero())
        throw precondition_error("NONZERO_CONSTANT_TERM",
                                 "series exp requires a zero constant term");
    TruncSeries r(s.T());
    if (s.T() == 0) return r;
    r.a[0] = GaussRat(1);
    // n E_n = sum_{j=1..n} j s_j E_{n-j}
    for (std::size_t n = 1; n < s.T(); ++n) {
        GaussRat acc(0);
        for (std::size_t j = 1; j <= n; ++j)
            acc += s.a[j] * GaussRat(Rat(Int(j))) * r.a[n - j];
        r.a[n] = acc / GaussRat(Rat(Int(n)));
    }
    return r;
}

// The branch of sqrt(z^2-1) with W(0) = i: W = i * (1 - z^2)^(1/2), by the
// binomial series. Coefficients are purely imaginary.
inline TruncSeries series_W(std::size_t T) {
    if (T < 1)
        throw precondition_error("TRUNCATION_TOO_SMALL", "series_W requires T >= 1");
    TruncSeries r(T);
    // binom(1/2, m) * (-1)^m at z^(2m)
    Rat c(1);
    for (std::size_t m = 0; 2 * m < T; ++m) {
        r.a[2 * m] = GaussRat(Rat(0), c);
        // next: c *= -(1/2 - m)/(m+1), including the (-1) from (-z^2)
        c = c * (Rat(1, 2) - Rat(Int(m))) / Rat(Int(m) + 1) * Rat(-1);
    }
    return r;
}

inline TruncSeries ts_from_poly(const PolyG& p, std::size_t T) {
    TruncSeries r(T);
    for (const auto& [e, c] : p.terms())
        if (e < T) r.a[e] = c;
    return r;
}

inline TruncSeries ts_from_poly(const PolyQ& p, std::size_t T) {
    return ts_from_poly(lift_poly(p), T);
}

// Expansion of a rational function at 0; the denominator must not vanish
// there.
inline TruncSeries ts_from_ratfunc(const RatFuncQ& f, std::size_t T) {
    if (f.den().constant_coeff() == 0)
        throw precondition_error("COEFFICIENT_POLE_AT_ZERO",
                                 "rational function has a pole at z = 0");
    TruncSeries num = ts_from_poly(f.num(), T);
    if (f.is_polynomial()) return num;
    return ts_mul(num, ts_inverse(ts_from_poly(f.den(), T)));
}

enum class WBranch { plus, minus };

// Realizes a + b*w as a power series near 0, substituting the chosen branch
// of W for w.
inline TruncSeries series_of_quad(const QuadElem& u, WBranch branch, std::size_t T) {
    TruncSeries sa = ts_from_ratfunc(u.a, T);
    TruncSeries sb = ts_from_ratfunc(u.b, T);
    TruncSeries w = series_W(T);
    if (branch == WBranch::minus) w = ts_neg(w);
    return ts_add(sa, ts_mul(w, sb));
}

} // namespace holonomica

#endif
