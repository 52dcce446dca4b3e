#ifndef HOLONOMICA_QUAD_HPP
#define HOLONOMICA_QUAD_HPP

#include <cstdint>
#include <utility>

#include "holonomica/ratfunc.hpp"

namespace holonomica {

enum class QuadMode { poly, ratfunc };

// w^2 - (z^2 - 1) as a polynomial in z.
inline PolyQ quad_disc() {
    PolyQ z = PolyQ::variable();
    return z * z - PolyQ::one();
}

// Element a + b*w of K[w]/(w^2 - (z^2-1)), K = Q[z] or Q(z).
struct QuadElem {
    RatFuncQ a;
    RatFuncQ b;
    QuadMode mode = QuadMode::poly;

    QuadElem() = default;
    QuadElem(RatFuncQ a_, RatFuncQ b_, QuadMode m) : a(std::move(a_)), b(std::move(b_)), mode(m) {
        if (mode == QuadMode::poly && !(a.is_polynomial() && b.is_polynomial()))
            throw precondition_error("NOT_POLYNOMIAL",
                                     "poly-mode quadratic element with denominators");
    }

    static QuadElem from_polys(PolyQ a_, PolyQ b_) {
        return QuadElem(RatFuncQ(std::move(a_)), RatFuncQ(std::move(b_)), QuadMode::poly);
    }
    static QuadElem one() { return from_polys(PolyQ::one(), PolyQ::zero()); }
    static QuadElem w() { return from_polys(PolyQ::zero(), PolyQ::one()); }
    // The fundamental unit z + w.
    static QuadElem fundamental_unit() {
        return from_polys(PolyQ::variable(), PolyQ::one());
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    QuadElem promoted() const { return QuadElem{a, b, QuadMode::ratfunc}; }

    friend bool operator==(const QuadElem& u, const QuadElem& v) {
        return u.a == v.a && u.b == v.b && u.mode == v.mode;
    }
    friend bool operator!=(const QuadElem& u, const QuadElem& v) { return !(u == v); }
};

inline void quad_require_same_mode(const QuadElem& u, const QuadElem& v) {
    if (u.mode != v.mode)
        throw precondition_error("RING_TAG_MISMATCH",
                                 "mixed poly-mode and ratfunc-mode operands");
}

inline QuadElem quad_add(const QuadElem& u, const QuadElem& v) {
    quad_require_same_mode(u, v);
    return QuadElem{u.a + v.a, u.b + v.b, u.mode};
}

inline QuadElem quad_sub(const QuadElem& u, const QuadElem& v) {
    quad_require_same_mode(u, v);
    return QuadElem{u.a - v.a, u.b - v.b, u.mode};
}

// (a1 + b1 w)(a2 + b2 w) with w^2 reduced to z^2 - 1.
inline QuadElem quad_mul(const QuadElem& u, const QuadElem& v) {
    quad_require_same_mode(u, v);
    RatFuncQ disc{quad_disc()};
    return QuadElem{u.a * v.a + u.b * v.b * disc, u.a * v.b + v.a * u.b, u.mode};
}

inline QuadElem quad_conj(const QuadElem& u) { return QuadElem{u.a, -u.b, u.mode}; }

// N(a + bw) = a^2 - (z^2-1) b^2.
inline RatFuncQ quad_norm(const QuadElem& u) {
    return u.a * u.a - RatFuncQ(quad_disc()) * u.b * u.b;
}

inline QuadElem quad_pow(const QuadElem& u, std::int64_t n) {
    QuadElem base = u;
    if (n < 0) {
        RatFuncQ nrm = quad_norm(u);
        if (!nrm.is_constant() || nrm.is_zero())
            throw precondition_error(
                "NON_INVERTIBLE",
                "negative power of an element whose norm is not a nonzero constant");
        RatFuncQ inv_norm = RatFuncQ(PolyQ::one()) / nrm;
        QuadElem c = quad_conj(u);
        base = QuadElem{c.a * inv_norm, c.b * inv_norm, u.mode};
        if (u.mode == QuadMode::poly &&
            !(base.a.is_polynomial() && base.b.is_polynomial()))
            base.mode = QuadMode::ratfunc;
        n = -n;
    }
    QuadElem r = QuadElem{RatFuncQ(PolyQ::one()), RatFuncQ(), base.mode};
    while (n) {
        if (n & 1) r = quad_mul(r, base);
        n >>= 1;
        if (n) base = quad_mul(base, base);
    }
    return r;
}

// (a + bw)' = a' + (b' + b z/(z^2-1)) w; w has a genuine pole at z = +-1,
// so the result always lives in ratfunc mode.
inline QuadElem quad_derivative(const QuadElem& u) {
    RatFuncQ wlog{PolyQ::variable(), quad_disc()};  // z/(z^2-1)
    return QuadElem{u.a.derivative(), u.b.derivative() + u.b * wlog, QuadMode::ratfunc};
}

} // namespace holonomica

#endif
