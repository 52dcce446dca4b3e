#ifndef HOLONOMICA_RATFUNC_HPP
#define HOLONOMICA_RATFUNC_HPP

#include <utility>

#include "holonomica/poly.hpp"

namespace holonomica {

// Rational function num/den in canonical form: den != 0, gcd(num, den) = 1,
// den monic.
template <class C>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<C>::one()) {}
    RatFunc(Poly<C> num) : num_(std::move(num)), den_(Poly<C>::one()) {}  // NOLINT
    RatFunc(Poly<C> num, Poly<C> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc constant(C c) { return RatFunc(Poly<C>::constant(std::move(c))); }
    static RatFunc variable() { return RatFunc(Poly<C>::variable()); }

    const Poly<C>& num() const { return num_; }
    const Poly<C>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly<C>::one(); }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero())
            throw precondition_error("DIVISION_BY_ZERO", "rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

private:
    void normalize() {
        if (den_.is_zero())
            throw precondition_error("DIVISION_BY_ZERO", "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<C>::one();
            return;
        }
        Poly<C> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly<C>::divrem(num_, g).first;
            den_ = Poly<C>::divrem(den_, g).first;
        }
        C lc = den_.leading_coeff();
        if (!(lc == C(1))) {
            C inv = C(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly<C> num_;
    Poly<C> den_;
};

using RatFuncQ = RatFunc<Rat>;
using RatFuncG = RatFunc<GaussRat>;

inline RatFuncG lift_ratfunc(const RatFuncQ& r) {
    return RatFuncG(lift_poly(r.num()), lift_poly(r.den()));
}

} // namespace holonomica

#endif
