#ifndef HOLONOMICA_POLY_HPP
#define HOLONOMICA_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "holonomica/errors.hpp"
#include "holonomica/rational.hpp"

namespace holonomica {

// Degree of the zero polynomial. Distinguished sentinel: every real degree
// is >= 0, so ordinary < comparisons behave (zero sorts below everything).
inline constexpr std::int64_t kZeroPolyDegree = -1;

inline std::uint64_t max_poly_degree() {
    static std::uint64_t cap = [] {
        if (const char* env = std::getenv("HOLONOMICA_MAX_DEGREE")) {
            long long v = std::atoll(env);
            if (v > 0) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(10000);
    }();
    return cap;
}

// Exact univariate polynomial over C in {Rat, GaussRat}. Sparse
// exponent-map storage; multiplication switches to a dense scratch buffer
// when the operands are dense enough that map churn would dominate.
template <class C>
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(C c) {
        Poly p;
        if (!coeff_is_zero(c)) p.terms_.emplace(0, std::move(c));
        return p;
    }
    static Poly one() { return constant(C(1)); }
    static Poly variable() { return monomial(1, C(1)); }
    static Poly monomial(std::uint64_t e, C c) {
        Poly p;
        if (!coeff_is_zero(c)) p.terms_.emplace(e, std::move(c));
        return p;
    }
    static Poly from_dense(const std::vector<C>& coeffs) {
        Poly p;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!coeff_is_zero(coeffs[i])) p.terms_.emplace(i, coeffs[i]);
        return p;
    }

    const std::map<std::uint64_t, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t degree() const {
        if (terms_.empty()) return kZeroPolyDegree;
        return static_cast<std::int64_t>(terms_.rbegin()->first);
    }
    std::uint64_t valuation() const {
        // Exponent of the lowest term; only meaningful for nonzero input.
        return terms_.empty() ? 0 : terms_.begin()->first;
    }
    std::size_t term_count() const { return terms_.size(); }

    C coeff(std::uint64_t e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }
    C leading_coeff() const {
        return terms_.empty() ? C(0) : terms_.rbegin()->second;
    }
    C constant_coeff() const { return coeff(0); }

    void set_coeff(std::uint64_t e, C c) {
        if (coeff_is_zero(c))
            terms_.erase(e);
        else
            terms_[e] = std::move(c);
    }

    bool is_constant() const { return degree() <= 0; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, c);
            } else {
                it->second += c;
                if (coeff_is_zero(it->second)) r.terms_.erase(it);
            }
        }
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::uint64_t da = a.terms_.rbegin()->first;
        std::uint64_t db = b.terms_.rbegin()->first;
        if (da + db > max_poly_degree())
            throw precondition_error("DEGREE_CAP",
                                     "product degree exceeds HOLONOMICA_MAX_DEGREE");
        std::uint64_t out_len = da + db + 1;
        // Dense scratch once term pairs rival the output length.
        if (a.term_count() * b.term_count() * 2 >= out_len) {
            std::vector<C> buf(out_len, C(0));
            for (const auto& [ea, ca] : a.terms_)
                for (const auto& [eb, cb] : b.terms_) buf[ea + eb] += ca * cb;
            return from_dense(buf);
        }
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                auto it = r.terms_.find(ea + eb);
                if (it == r.terms_.end()) {
                    C v = ca * cb;
                    if (!coeff_is_zero(v)) r.terms_.emplace(ea + eb, std::move(v));
                } else {
                    it->second += ca * cb;
                    if (coeff_is_zero(it->second)) r.terms_.erase(it);
                }
            }
        return r;
    }

    friend Poly operator*(const Poly& a, const C& s) {
        Poly r;
        if (coeff_is_zero(s)) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }
    friend Poly operator*(const C& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Quotient and remainder with deg r < deg b; requires b != 0.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero())
            throw precondition_error("DIVISION_BY_ZERO", "polynomial division by zero");
        Poly q, r = a;
        const std::int64_t db = b.degree();
        const C lb = b.leading_coeff();
        while (!r.is_zero() && r.degree() >= db) {
            std::uint64_t e = static_cast<std::uint64_t>(r.degree() - db);
            C c = r.leading_coeff() / lb;
            Poly t = monomial(e, c);
            q += t;
            r -= t * b;
        }
        return {q, r};
    }

    Poly derivative() const {
        Poly r;
        for (const auto& [e, c] : terms_)
            if (e > 0) r.terms_.emplace(e - 1, coeff_mul_rat(c, Rat(Int(e))));
        return r;
    }

    C eval(const C& x) const {
        // Horner with gap exponents.
        if (terms_.empty()) return C(0);
        C acc(0);
        std::uint64_t prev = 0;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (first) {
                acc = it->second;
                prev = it->first;
                first = false;
                continue;
            }
            acc = acc * coeff_pow(x, prev - it->first) + it->second;
            prev = it->first;
        }
        return acc * coeff_pow(x, prev);
    }

    // p(x + delta), exact Taylor shift via Horner.
    Poly shifted_arg(const C& delta) const {
        Poly x_plus_d = variable() + constant(delta);
        Poly acc;
        for (auto it = terms_.rbegin(); it != terms_.rend();) {
            std::uint64_t e = it->first;
            C c = it->second;
            ++it;
            std::uint64_t next = (it == terms_.rend()) ? 0 : it->first;
            acc = acc + constant(c);
            for (std::uint64_t k = next; k < e; ++k) acc = acc * x_plus_d;
        }
        return acc;
    }

    static Poly pow(const Poly& base, std::uint64_t n) {
        Poly r = one(), b = base;
        while (n) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return r;
    }

private:
    static C coeff_pow(const C& x, std::uint64_t n) {
        C r(1), b = x;
        while (n) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return r;
    }

    std::map<std::uint64_t, C> terms_;
};

using PolyQ = Poly<Rat>;
using PolyG = Poly<GaussRat>;

template <class C>
Poly<C> poly_monic(const Poly<C>& p) {
    if (p.is_zero()) return p;
    C inv = C(1) / p.leading_coeff();
    return p * inv;
}

// Monic gcd via the Euclidean algorithm over the coefficient field.
template <class C>
Poly<C> poly_gcd(Poly<C> a, Poly<C> b) {
    while (!b.is_zero()) {
        auto [q, r] = Poly<C>::divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

// Positive rational s such that p/s has integer (Gaussian-integer)
// coefficients with collective gcd 1; s = 0 for the zero polynomial.
template <class C>
Rat poly_content(const Poly<C>& p) {
    Int g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        for (const Rat& r : coeff_components(c)) {
            if (r == 0) continue;
            g = boost::multiprecision::gcd(g, rat_num(r) < 0 ? Int(-rat_num(r)) : rat_num(r));
            l = boost::multiprecision::lcm(l, rat_den(r));
        }
    }
    if (g == 0) return Rat(0);
    return Rat(g, l);
}

template <class C>
Rat poly_list_content(const std::vector<Poly<C>>& ps) {
    Int g = 0, l = 1;
    for (const auto& p : ps)
        for (const auto& [e, c] : p.terms()) {
            (void)e;
            for (const Rat& r : coeff_components(c)) {
                if (r == 0) continue;
                g = boost::multiprecision::gcd(g, rat_num(r) < 0 ? Int(-rat_num(r)) : rat_num(r));
                l = boost::multiprecision::lcm(l, rat_den(r));
            }
        }
    if (g == 0) return Rat(0);
    return Rat(g, l);
}

template <class C>
Poly<C> poly_scale_rat(const Poly<C>& p, const Rat& s) {
    Poly<C> r;
    for (const auto& [e, c] : p.terms()) r.set_coeff(e, coeff_mul_rat(c, s));
    return r;
}

inline PolyG lift_poly(const PolyQ& p) {
    PolyG r;
    for (const auto& [e, c] : p.terms()) r.set_coeff(e, GaussRat(c));
    return r;
}

// Attempts the reverse of lift_poly; empty when any coefficient is nonreal.
inline std::optional<PolyQ> lower_poly(const PolyG& p) {
    PolyQ r;
    for (const auto& [e, c] : p.terms()) {
        if (c.im != 0) return std::nullopt;
        r.set_coeff(e, c.re);
    }
    return r;
}

// Exactly the integer roots of p != 0, via rational-root enumeration on the
// primitive integer form, ascending.
inline std::vector<Int> integer_roots(const PolyQ& p) {
    if (p.is_zero())
        throw precondition_error("ZERO_POLYNOMIAL", "integer_roots of the zero polynomial");
    std::vector<Int> roots;
    std::uint64_t v = p.valuation();
    if (v > 0) roots.push_back(0);
    // Strip z^v and clear denominators.
    std::vector<Int> c;
    Int l = 1;
    for (const auto& [e, q] : p.terms()) {
        (void)e;
        l = boost::multiprecision::lcm(l, rat_den(q));
    }
    std::int64_t deg = p.degree();
    c.assign(static_cast<std::size_t>(deg - static_cast<std::int64_t>(v)) + 1, Int(0));
    for (const auto& [e, q] : p.terms())
        c[e - v] = rat_num(q) * (l / rat_den(q));
    Int a0 = c.front();
    if (a0 < 0) a0 = -a0;
    Int lead = c.back();
    if (lead < 0) lead = -lead;
    // Cauchy bound: integer roots have |r| <= 1 + max|c_i|/|lead|.
    Int maxc = 0;
    for (const Int& ci : c) {
        Int a = ci < 0 ? Int(-ci) : ci;
        if (a > maxc) maxc = a;
    }
    Int bound = 1 + maxc / lead;
    auto eval_at = [&](const Int& x) {
        Int acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    std::vector<Int> candidates;
    for (Int d = 1; d * d <= a0 && d <= bound; ++d) {
        if (a0 % d != 0) continue;
        candidates.push_back(d);
        Int cof = a0 / d;
        if (cof <= bound) candidates.push_back(cof);
    }
    for (const Int& d : candidates) {
        if (eval_at(d) == 0) roots.push_back(d);
        if (eval_at(-d) == 0) roots.push_back(-d);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace holonomica

#endif
