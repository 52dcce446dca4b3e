#ifndef HOLONOMICA_PELL_HPP
#define HOLONOMICA_PELL_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <vector>
#include <stdexcept>
#include <utility>

#include "holonomica/holonomic.hpp"
#include "holonomica/quad.hpp"
#include "holonomica/series.hpp"

namespace holonomica {

// Polynomial Pell solution: x^2 - (z^2-1) y^2 = 1 with x + w y = (z+w)^n,
// integer coefficients, y(1) = n, deg x = |n|.
struct PellWitness {
    int epsilon = 1;  // +1 or -1
    std::int64_t n = 0;
    PolyQ x;
    PolyQ y;
};

inline bool poly_has_integer_coeffs(const PolyQ& p) {
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        if (!rat_is_integer(c)) return false;
    }
    return true;
}

namespace pelldetail {

// Dense integer polynomials: the Pell family has integer coefficients and
// degree up to |n|, where the generic rational ring (one gcd per
// coefficient operation) is needlessly slow for the |n| <= 200 sweeps.
using DenseInt = std::vector<Int>;

inline DenseInt to_dense(const PolyQ& p) {
    DenseInt d(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1, Int(0));
    for (const auto& [e, c] : p.terms()) d[e] = rat_num(c);
    return d;
}

inline PolyQ from_dense(const DenseInt& d) {
    PolyQ p;
    for (std::size_t e = 0; e < d.size(); ++e)
        if (d[e] != 0) p.set_coeff(e, Rat(d[e]));
    return p;
}

inline DenseInt dense_square(const DenseInt& a) {
    if (a.empty()) return {};
    DenseInt r(2 * a.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] != 0) r[i + j] += a[i] * a[j];
    }
    return r;
}

// f^2 - (z^2-1) g^2 == 1 over the integers.
inline bool dense_pell_identity(const DenseInt& f, const DenseInt& g) {
    DenseInt f2 = dense_square(f);
    DenseInt g2 = dense_square(g);
    std::size_t len = std::max(f2.size(), g2.size() + 2);
    DenseInt res(len, Int(0));
    for (std::size_t i = 0; i < f2.size(); ++i) res[i] = f2[i];
    for (std::size_t i = 0; i < g2.size(); ++i) {
        res[i + 2] -= g2[i];  // -(z^2) g^2
        res[i] += g2[i];      // +g^2
    }
    if (res.empty() || res[0] != 1) return false;
    for (std::size_t i = 1; i < res.size(); ++i)
        if (res[i] != 0) return false;
    return true;
}

} // namespace pelldetail

inline bool pell_verify_poly(const PolyQ& f, const PolyQ& g) {
    if (poly_has_integer_coeffs(f) && poly_has_integer_coeffs(g))
        return pelldetail::dense_pell_identity(pelldetail::to_dense(f),
                                               pelldetail::to_dense(g));
    return f * f - quad_disc() * g * g == PolyQ::one();
}

inline PellWitness pell_generate(std::int64_t n) {
    // (x_{k+1}, y_{k+1}) = (z x_k + (z^2-1) y_k, x_k + z y_k), and the
    // negative side by conjugation: x_{-n} = x_n, y_{-n} = -y_n.
    std::int64_t absn = n < 0 ? -n : n;
    pelldetail::DenseInt x{Int(1)};
    pelldetail::DenseInt y;
    for (std::int64_t k = 0; k < absn; ++k) {
        std::size_t d = x.size();  // deg x_k + 1; deg y_k = d - 2
        pelldetail::DenseInt nx(d + 1, Int(0));
        pelldetail::DenseInt ny(d, Int(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i] != 0) {
                nx[i + 1] += x[i];  // z x
                ny[i] += x[i];      // x
            }
        }
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] == 0) continue;
            nx[i + 2] += y[i];  // z^2 y
            nx[i] -= y[i];      // -y
            ny[i + 1] += y[i];  // z y
        }
        x = std::move(nx);
        y = std::move(ny);
    }
    if (n < 0)
        for (auto& c : y) c = -c;
    PellWitness w;
    w.epsilon = 1;
    w.n = n;
    w.x = pelldetail::from_dense(x);
    w.y = pelldetail::from_dense(y);
    // The invariants are cheap to re-check; fail loudly if they ever break.
    if (!pell_verify_poly(w.x, w.y) || !poly_has_integer_coeffs(w.x) ||
        !poly_has_integer_coeffs(w.y) || w.y.eval(Rat(1)) != Rat(Int(n)) ||
        w.x.degree() != absn)
        throw std::logic_error("pell_generate: invariant violation");
    return w;
}

struct PellClass {
    int epsilon;
    std::int64_t n;
};

// Recovers the unique (epsilon, n) with (f, g) = (epsilon x_n, y_n).
inline PellClass pell_classify(const PolyQ& f, const PolyQ& g) {
    if (!pell_verify_poly(f, g))
        throw precondition_error("NOT_A_SOLUTION", "f^2 - (z^2-1) g^2 != 1");
    Rat y1 = g.eval(Rat(1));
    if (!rat_is_integer(y1))
        throw precondition_error("NOT_A_SOLUTION", "y(1) is not an integer");
    std::int64_t n = static_cast<std::int64_t>(rat_num(y1).convert_to<long long>());
    std::int64_t absn = n < 0 ? -n : n;
    if (f.degree() != absn)
        throw precondition_error("NOT_A_SOLUTION", "deg f != |y(1)|");
    PellWitness ref = pell_generate(n);
    if (f == ref.x && g == ref.y) return {+1, n};
    if (f == -ref.x && g == ref.y) return {-1, n};
    throw precondition_error("NOT_A_SOLUTION", "not of the form (eps x_n, y_n)");
}

// Truncated entire solution built from eps * (z+w)^n * exp(w h). When
// h(0) != 0 the coefficients involve the unit constant u = exp(i h(0));
// series are stored per power of u (Laurent components), and all identities
// hold exactly in that extension. h(0) = 0 collapses to the single key 0.
using ExtSeries = std::map<int, TruncSeries>;

struct EntirePellData {
    int epsilon = 1;
    std::int64_t n = 0;
    PolyQ h;
    std::size_t T = 0;
    ExtSeries f;
    ExtSeries g;
};

inline ExtSeries ext_mul(const ExtSeries& s, const ExtSeries& t) {
    ExtSeries r;
    for (const auto& [es, vs] : s)
        for (const auto& [et, vt] : t) {
            TruncSeries prod = ts_mul(vs, vt);
            auto it = r.find(es + et);
            if (it == r.end())
                r.emplace(es + et, std::move(prod));
            else
                it->second = ts_add(it->second, prod);
        }
    return r;
}

inline ExtSeries ext_sub(ExtSeries s, const ExtSeries& t) {
    for (const auto& [e, v] : t) {
        auto it = s.find(e);
        if (it == s.end())
            s.emplace(e, ts_neg(v));
        else
            it->second = ts_sub(it->second, v);
    }
    return s;
}

inline bool ext_is_zero(const ExtSeries& s) {
    for (const auto& [e, v] : s) {
        (void)e;
        if (!v.all_zero()) return false;
    }
    return true;
}

inline ExtSeries ext_one(std::size_t T) {
    ExtSeries r;
    r.emplace(0, ts_one(T));
    return r;
}

// f^2 - (z^2-1) g^2 - 1, componentwise over powers of the unit constant.
inline ExtSeries pell_residual(const ExtSeries& f, const ExtSeries& g, std::size_t T) {
    ExtSeries disc;
    disc.emplace(0, ts_from_poly(quad_disc(), T));
    ExtSeries r = ext_sub(ext_mul(f, f), ext_mul(disc, ext_mul(g, g)));
    return ext_sub(std::move(r), ext_one(T));
}

inline EntirePellData pell_general_solution(int epsilon, std::int64_t n, const PolyQ& h,
                                            std::size_t T) {
    if (T < 8)
        throw precondition_error("TRUNCATION_TOO_SMALL",
                                 "pell_general_solution requires T >= 8");
    if (epsilon != 1 && epsilon != -1)
        throw precondition_error("BAD_EPSILON", "epsilon must be +1 or -1");
    const GaussRat eps{Rat(epsilon)};
    QuadElem zw_n = quad_pow(QuadElem::fundamental_unit(), n);
    TruncSeries plus = series_of_quad(zw_n, WBranch::plus, T);
    TruncSeries minus = series_of_quad(zw_n, WBranch::minus, T);
    // w h realized on the +W branch, with the constant i h(0) split off.
    Rat h0 = h.eval(Rat(0));
    TruncSeries wh = ts_mul(series_W(T), ts_from_poly(h, T));
    if (T > 0) wh.a[0] = GaussRat(0);  // remove i h(0)
    TruncSeries E = ts_exp(wh);
    TruncSeries Ebar = ts_exp(ts_neg(wh));
    TruncSeries S = ts_scale(ts_mul(plus, E), eps);
    TruncSeries Sbar = ts_scale(ts_mul(minus, Ebar), eps);
    int uexp = (h0 == 0) ? 0 : 1;

    const GaussRat half(Rat(1, 2));
    TruncSeries inv2W = ts_inverse(ts_scale(series_W(T), GaussRat(2)));
    EntirePellData data;
    data.epsilon = epsilon;
    data.n = n;
    data.h = h;
    data.T = T;
    if (uexp == 0) {
        data.f.emplace(0, ts_scale(ts_add(S, Sbar), half));
        data.g.emplace(0, ts_mul(ts_sub(S, Sbar), inv2W));
    } else {
        data.f.emplace(+1, ts_scale(S, half));
        data.f.emplace(-1, ts_scale(Sbar, half));
        data.g.emplace(+1, ts_mul(S, inv2W));
        data.g.emplace(-1, ts_neg(ts_mul(Sbar, inv2W)));
    }
    if (!ext_is_zero(pell_residual(data.f, data.g, T)))
        throw std::logic_error("pell_general_solution: Pell identity failed to truncation");
    return data;
}

// Rank-4 derivation module over Q(z) with basis (A, wA, B, wB) for
// A = eps (z+w)^n exp(wh), B = eps (z-w)^n exp(-wh):
//   A' = alpha w A,  (wA)' = alpha (z^2-1) A + z/(z^2-1) wA,
// and the sign of alpha flipped on the B half, where
//   alpha = (n + z h)/(z^2-1) + h'.
inline DModule pell_witness_module(std::int64_t n, const PolyQ& h) {
    PolyQ z = PolyQ::variable();
    PolyQ disc = quad_disc();
    RatFuncQ alpha_q =
        RatFuncQ(PolyQ::constant(Rat(Int(n))) + z * h, disc) + RatFuncQ(h.derivative());
    RatFuncG alpha = lift_ratfunc(alpha_q);
    RatFuncG discG{lift_poly(disc)};
    RatFuncG wlog = lift_ratfunc(RatFuncQ(z, disc));
    DModule m = DModule::make(4);
    m.M[1][0] = alpha;
    m.M[0][1] = alpha * discG;
    m.M[1][1] = wlog;
    m.M[3][2] = -alpha;
    m.M[2][3] = -alpha * discG;
    m.M[3][3] = wlog;
    return m;
}

// Annihilators for f and g of the entire solution; both are verified
// against the truncated realization before returning.
inline std::pair<OdeAnnihilator, OdeAnnihilator> pell_holonomic_witness(
    int epsilon, std::int64_t n, const PolyQ& h, std::size_t check_T = 120) {
    DModule m = pell_witness_module(n, h);
    RatFuncG half = RatFuncG::constant(GaussRat(Rat(1, 2)));
    RatFuncG inv2disc =
        RatFuncG(PolyG::constant(GaussRat(Rat(1, 2))), lift_poly(quad_disc()));
    // f = (A + B)/2, g = (wA - wB)/(2 (z^2-1)).
    std::vector<RatFuncG> f_elem{half, RatFuncG(), half, RatFuncG()};
    std::vector<RatFuncG> g_elem{RatFuncG(), inv2disc, RatFuncG(), -inv2disc};
    OdeAnnihilator ode_f = dmodule_annihilator(m, f_elem);
    OdeAnnihilator ode_g = dmodule_annihilator(m, g_elem);
    EntirePellData data = pell_general_solution(epsilon, n, h, check_T);
    for (const auto& [e, s] : data.f) {
        (void)e;
        if (!ode_series_check(ode_f, s))
            throw std::logic_error("pell_holonomic_witness: f annihilator failed series check");
    }
    for (const auto& [e, s] : data.g) {
        (void)e;
        if (!ode_series_check(ode_g, s))
            throw std::logic_error("pell_holonomic_witness: g annihilator failed series check");
    }
    return {std::move(ode_f), std::move(ode_g)};
}

} // namespace holonomica

#endif
