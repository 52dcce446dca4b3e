#ifndef HOLONOMICA_HOLONOMIC_HPP
#define HOLONOMICA_HOLONOMIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "holonomica/linalg.hpp"
#include "holonomica/series.hpp"

namespace holonomica {

// Annihilating ODE P_k F^(k) + ... + P_0 F = 0, P_k != 0, stored
// content-free and sign-normalized. The zero function carries a flag
// instead of an order-0 equation.
struct OdeAnnihilator {
    bool zero_function = false;
    std::vector<PolyG> P;  // index i = coefficient of F^(i)

    std::size_t order() const { return zero_function ? 0 : P.size() - 1; }

    static OdeAnnihilator zero_annihilator() {
        OdeAnnihilator o;
        o.zero_function = true;
        return o;
    }

    friend bool operator==(const OdeAnnihilator& a, const OdeAnnihilator& b) {
        return a.zero_function == b.zero_function && a.P == b.P;
    }
    friend bool operator!=(const OdeAnnihilator& a, const OdeAnnihilator& b) {
        return !(a == b);
    }
};

// One linear constraint sum coeff * a_index = 0 absorbed at a negative
// pre-shift index during ODE -> recurrence conversion.
struct BoundaryRelation {
    std::vector<std::pair<std::uint64_t, GaussRat>> terms;

    friend bool operator==(const BoundaryRelation& x, const BoundaryRelation& y) {
        return x.terms == y.terms;
    }
};

// p_k(n) a_{n+k} + ... + p_0(n) a_n = 0, valid for every n >= 0 under the
// convention a_m = 0 for m < 0.
struct Recurrence {
    std::vector<PolyG> p;  // index j = coefficient of a_{n+j}, in the variable n
    std::vector<BoundaryRelation> boundary;

    std::size_t order() const { return p.size() - 1; }

    friend bool operator==(const Recurrence& a, const Recurrence& b) {
        return a.p == b.p && a.boundary == b.boundary;
    }
    friend bool operator!=(const Recurrence& a, const Recurrence& b) { return !(a == b); }
};

namespace detail {

// Divides out the common polynomial factor, rescales to a Gaussian-integer
// primitive list, and applies the sign rule: the leading coefficient of the
// top polynomial has positive real part, or zero real part and positive
// imaginary part.
inline void normalize_coeff_list(std::vector<PolyG>& P) {
    while (!P.empty() && P.back().is_zero()) P.pop_back();
    if (P.empty()) throw std::logic_error("normalize: identically zero operator");
    PolyG g;
    bool first = true;
    for (const auto& q : P) {
        if (q.is_zero()) continue;
        if (first) {
            g = poly_monic(q);
            first = false;
        } else if (g.degree() > 0) {
            g = poly_gcd(g, q);
        }
    }
    if (g.degree() > 0)
        for (auto& q : P)
            if (!q.is_zero()) q = PolyG::divrem(q, g).first;
    Rat cont = poly_list_content(P);
    if (cont != 0 && cont != 1) {
        Rat inv = 1 / cont;
        for (auto& q : P) q = poly_scale_rat(q, inv);
    }
    GaussRat lc = P.back().leading_coeff();
    if (lc.re < 0 || (lc.re == 0 && lc.im < 0))
        for (auto& q : P) q = -q;
}

} // namespace detail

inline OdeAnnihilator make_ode(std::vector<PolyG> P) {
    detail::normalize_coeff_list(P);
    if (P.size() < 2)
        throw std::logic_error("make_ode: order must be at least 1");
    OdeAnnihilator o;
    o.P = std::move(P);
    return o;
}

inline OdeAnnihilator normalize_ode(const OdeAnnihilator& o) {
    if (o.zero_function) return o;
    return make_ode(o.P);
}

inline Recurrence make_recurrence(std::vector<PolyG> p,
                                  std::vector<BoundaryRelation> boundary = {}) {
    detail::normalize_coeff_list(p);
    Recurrence r;
    r.p = std::move(p);
    r.boundary = std::move(boundary);
    return r;
}

inline Recurrence normalize_recurrence(const Recurrence& r) {
    return make_recurrence(r.p, r.boundary);
}

// ---------------------------------------------------------------------------
// ODE <-> recurrence conversion
// ---------------------------------------------------------------------------

// Coefficient-of-z^n extraction: z^j F^(i) contributes
// (n-j+i)(n-j+i-1)...(n-j+1) a_{n-j+i}; offsets are then shifted to be
// nonnegative, constraints lost at negative pre-shift indices land in the
// boundary list.
inline Recurrence ode_to_recurrence(const OdeAnnihilator& ode) {
    if (ode.zero_function)
        throw precondition_error("ZERO_ANNIHILATOR",
                                 "the zero function has no coefficient recurrence");
    std::map<std::int64_t, PolyG> q;  // offset s -> coefficient polynomial in n
    const PolyG n = PolyG::variable();
    for (std::size_t i = 0; i < ode.P.size(); ++i) {
        for (const auto& [j, c] : ode.P[i].terms()) {
            // falling factorial prod_{t=1..i} (n - j + t)
            PolyG fact = PolyG::one();
            for (std::size_t t = 1; t <= i; ++t)
                fact *= n + PolyG::constant(GaussRat(Rat(Int(t) - Int(j))));
            std::int64_t s = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
            auto it = q.find(s);
            if (it == q.end())
                q.emplace(s, fact * c);
            else
                it->second += fact * c;
        }
    }
    for (auto it = q.begin(); it != q.end();)
        it = it->second.is_zero() ? q.erase(it) : std::next(it);
    if (q.empty()) throw std::logic_error("ode_to_recurrence: empty operator");
    std::int64_t smin = q.begin()->first;
    std::int64_t smax = q.rbegin()->first;
    std::int64_t delta = smin < 0 ? -smin : 0;
    std::vector<PolyG> p(static_cast<std::size_t>(smax + delta) + 1);
    for (const auto& [s, poly] : q)
        p[static_cast<std::size_t>(s + delta)] =
            poly.shifted_arg(GaussRat(Rat(Int(delta))));
    std::vector<BoundaryRelation> boundary;
    for (std::int64_t n0 = 0; n0 < delta; ++n0) {
        BoundaryRelation rel;
        for (const auto& [s, poly] : q) {
            if (n0 + s < 0) continue;  // a_{<0} = 0 convention
            GaussRat v = poly.eval(GaussRat(Rat(Int(n0))));
            if (!v.is_zero())
                rel.terms.emplace_back(static_cast<std::uint64_t>(n0 + s), v);
        }
        if (!rel.terms.empty()) boundary.push_back(std::move(rel));
    }
    return make_recurrence(std::move(p), std::move(boundary));
}

// Rewrites n^r a_{n+j} through the Euler operator theta = z d/dz. The
// construction yields L with L F equal to a polynomial of degree < k built
// from initial terms; differentiating enough times clears it. The result
// is normalized; global minimality is not certified.
inline OdeAnnihilator recurrence_to_ode(const Recurrence& rec) {
    const std::size_t k = rec.order();
    std::size_t rmax = 0;
    for (const auto& pj : rec.p)
        if (pj.degree() > static_cast<std::int64_t>(rmax))
            rmax = static_cast<std::size_t>(pj.degree());
    // S2 table via the standard recurrence S(r,i) = i S(r-1,i) + S(r-1,i-1).
    std::vector<std::vector<Rat>> S2(rmax + 1);
    for (std::size_t r = 0; r <= rmax; ++r) {
        S2[r].assign(rmax + 1, Rat(0));
        if (r == 0) {
            S2[0][0] = 1;
            continue;
        }
        for (std::size_t i = 1; i <= r; ++i)
            S2[r][i] = Rat(Int(i)) * S2[r - 1][i] + S2[r - 1][i - 1];
    }
    // L = sum_j z^(k-j) p_j(theta - j); theta^r = sum_i S2(r,i) z^i D^i.
    std::vector<PolyG> Q(rmax + 1);  // coefficient of D^i
    for (std::size_t j = 0; j <= k; ++j) {
        if (rec.p[j].is_zero()) continue;
        PolyG shifted = rec.p[j].shifted_arg(GaussRat(Rat(-Int(j))));
        for (const auto& [r, beta] : shifted.terms()) {
            for (std::size_t i = 0; i <= r; ++i) {
                if (S2[r][i] == 0) continue;
                Q[i] += PolyG::monomial(k - j + i, coeff_mul_rat(beta, S2[r][i]));
            }
        }
    }
    // Initial-term corrections that survive: exponents k - j + m with
    // p_j(m - j) != 0, 0 <= m < j. Differentiate past the largest one.
    std::int64_t max_exp = -1;
    for (std::size_t j = 1; j <= k; ++j) {
        if (rec.p[j].is_zero()) continue;
        for (std::size_t m = 0; m < j; ++m) {
            GaussRat v = rec.p[j].eval(GaussRat(Rat(Int(m) - Int(j))));
            if (!v.is_zero()) {
                std::int64_t e = static_cast<std::int64_t>(k - j + m);
                if (e > max_exp) max_exp = e;
            }
        }
    }
    for (std::int64_t t = 0; t <= max_exp; ++t) {
        std::vector<PolyG> next(Q.size() + 1);
        for (std::size_t i = 0; i < Q.size(); ++i) {
            next[i] += Q[i].derivative();
            next[i + 1] += Q[i];
        }
        Q = std::move(next);
    }
    return make_ode(std::move(Q));
}

// ---------------------------------------------------------------------------
// Derivation modules
// ---------------------------------------------------------------------------

// Finite-rank Q(z)-vector space with a derivation rule: the derivative of
// basis element j has coordinates M[.][j]; an element with coordinates v
// differentiates to M v + v'.
struct DModule {
    std::size_t rank = 0;
    std::vector<std::vector<RatFuncG>> M;  // M[i][j]

    static DModule make(std::size_t rank) {
        DModule m;
        m.rank = rank;
        m.M.assign(rank, std::vector<RatFuncG>(rank));
        return m;
    }

    std::vector<RatFuncG> derive(const std::vector<RatFuncG>& v) const {
        std::vector<RatFuncG> r(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            r[i] = v[i].derivative();
            for (std::size_t j = 0; j < rank; ++j)
                if (!M[i][j].is_zero() && !v[j].is_zero()) r[i] += M[i][j] * v[j];
        }
        return r;
    }
};

// Companion module of an annihilator: basis F, F', ..., F^(k-1).
inline DModule companion_module(const OdeAnnihilator& ode) {
    const std::size_t k = ode.order();
    DModule m = DModule::make(k);
    for (std::size_t j = 0; j + 1 < k; ++j) m.M[j + 1][j] = RatFuncG::constant(GaussRat(1));
    RatFuncG lead{ode.P[k]};
    for (std::size_t i = 0; i < k; ++i)
        m.M[i][k - 1] = -(RatFuncG{ode.P[i]} / lead);
    return m;
}

inline DModule dmodule_direct_sum(const DModule& A, const DModule& B) {
    DModule m = DModule::make(A.rank + B.rank);
    for (std::size_t i = 0; i < A.rank; ++i)
        for (std::size_t j = 0; j < A.rank; ++j) m.M[i][j] = A.M[i][j];
    for (std::size_t i = 0; i < B.rank; ++i)
        for (std::size_t j = 0; j < B.rank; ++j) m.M[A.rank + i][A.rank + j] = B.M[i][j];
    return m;
}

// Basis (a, b) -> index a * rank(B) + b; derivation by the Leibniz rule.
inline DModule dmodule_tensor(const DModule& A, const DModule& B) {
    DModule m = DModule::make(A.rank * B.rank);
    auto idx = [&](std::size_t a, std::size_t b) { return a * B.rank + b; };
    for (std::size_t a = 0; a < A.rank; ++a)
        for (std::size_t b = 0; b < B.rank; ++b) {
            for (std::size_t i = 0; i < A.rank; ++i)
                if (!A.M[i][a].is_zero()) m.M[idx(i, b)][idx(a, b)] += A.M[i][a];
            for (std::size_t j = 0; j < B.rank; ++j)
                if (!B.M[j][b].is_zero()) m.M[idx(a, j)][idx(a, b)] += B.M[j][b];
        }
    return m;
}

// Stacks element, element', element'', ... and returns the operator given
// by the first left dependence; order never exceeds the module rank.
inline OdeAnnihilator dmodule_annihilator(const DModule& m,
                                          const std::vector<RatFuncG>& element) {
    bool zero = true;
    for (const auto& x : element)
        if (!x.is_zero()) zero = false;
    if (zero) return OdeAnnihilator::zero_annihilator();
    DependenceFinder<GaussRat> finder(m.rank);
    std::vector<RatFuncG> v = element;
    for (std::size_t step = 0; step <= m.rank; ++step) {
        if (auto dep = finder.feed(v)) {
            if (dep->size() < 2) {
                // Dependence at the zeroth derivative would mean element = 0.
                throw std::logic_error("dmodule_annihilator: unexpected rank-0 dependence");
            }
            return make_ode(std::move(*dep));
        }
        v = m.derive(v);
    }
    throw std::logic_error("dmodule_annihilator: no dependence within rank bound");
}

// Minimal annihilator of a rational function (rank-1 module with basis 1).
inline OdeAnnihilator annihilator_of_ratfunc(const RatFuncG& f) {
    DModule m = DModule::make(1);
    return dmodule_annihilator(m, {f});
}

// ---------------------------------------------------------------------------
// Closure properties
// ---------------------------------------------------------------------------

inline OdeAnnihilator annihilator_add(const OdeAnnihilator& f, const OdeAnnihilator& g) {
    if (f.zero_function) return normalize_ode(g);
    if (g.zero_function) return normalize_ode(f);
    DModule m = dmodule_direct_sum(companion_module(f), companion_module(g));
    std::vector<RatFuncG> elem(m.rank);
    elem[0] = RatFuncG::constant(GaussRat(1));
    elem[f.order()] = RatFuncG::constant(GaussRat(1));
    return dmodule_annihilator(m, elem);
}

inline OdeAnnihilator annihilator_mul(const OdeAnnihilator& f, const OdeAnnihilator& g) {
    if (f.zero_function || g.zero_function) return OdeAnnihilator::zero_annihilator();
    DModule m = dmodule_tensor(companion_module(f), companion_module(g));
    std::vector<RatFuncG> elem(m.rank);
    elem[0] = RatFuncG::constant(GaussRat(1));  // f^(0) g^(0)
    return dmodule_annihilator(m, elem);
}

// ---------------------------------------------------------------------------
// Unrolling and series verification
// ---------------------------------------------------------------------------

// Forward solve for a_0..a_N. Where p_k(n) = 0 the relation is checked for
// consistency and a_{n+k} must come from `supplied`.
inline std::vector<GaussRat> recurrence_unroll(
    const Recurrence& rec, const std::vector<GaussRat>& initial, std::size_t N,
    const std::map<std::uint64_t, GaussRat>& supplied = {}) {
    const std::size_t k = rec.order();
    if (initial.size() < k)
        throw precondition_error("INSUFFICIENT_INITIAL_DATA",
                                 "need at least order-many initial terms");
    std::vector<GaussRat> a(initial.begin(), initial.end());
    if (a.size() > N + 1) a.resize(N + 1);
    auto relation_residual = [&](std::size_t n, bool include_top) {
        GaussRat acc(0);
        std::size_t top = include_top ? k : k - 1;
        for (std::size_t j = 0; j <= top; ++j) {
            if (rec.p[j].is_zero()) continue;
            acc += rec.p[j].eval(GaussRat(Rat(Int(n)))) * a[n + j];
        }
        return acc;
    };
    for (std::size_t n = 0; n + k <= N; ++n) {
        GaussRat lead = rec.p[k].eval(GaussRat(Rat(Int(n))));
        if (n + k < a.size()) {
            // Value already pinned by initial data; verify the relation.
            if (!relation_residual(n, true).is_zero())
                throw precondition_error("INCONSISTENT",
                                         "initial data violates the relation at n = " +
                                             std::to_string(n));
            continue;
        }
        if (lead.is_zero()) {
            auto it = supplied.find(n + k);
            if (it == supplied.end())
                throw precondition_error(
                    "UNDETERMINED",
                    "leading coefficient vanishes at n = " + std::to_string(n) +
                        " and a_" + std::to_string(n + k) + " was not supplied");
            if (!relation_residual(n, false).is_zero())
                throw precondition_error("INCONSISTENT",
                                         "relation fails on known terms at n = " +
                                             std::to_string(n));
            a.push_back(it->second);
        } else {
            a.push_back(-relation_residual(n, false) / lead);
        }
    }
    a.resize(N + 1, GaussRat(0));
    return a;
}

// True iff all computable coefficients of P_k s^(k) + ... + P_0 s vanish.
inline bool ode_series_check(const OdeAnnihilator& ode, const TruncSeries& s) {
    if (ode.zero_function) return s.all_zero();
    const std::size_t k = ode.order();
    std::int64_t maxdeg = 0;
    for (const auto& p : ode.P)
        if (p.degree() > maxdeg) maxdeg = p.degree();
    if (s.T() <= k + static_cast<std::size_t>(maxdeg))
        throw precondition_error("TRUNCATION_TOO_SHORT",
                                 "series order must exceed ODE order plus max degree");
    std::size_t window = s.T() - k - static_cast<std::size_t>(maxdeg);
    std::vector<GaussRat> acc(window, GaussRat(0));
    TruncSeries d = s;
    for (std::size_t i = 0; i <= k; ++i) {
        if (!ode.P[i].is_zero()) {
            for (const auto& [e, c] : ode.P[i].terms())
                for (std::size_t idx = 0; idx + e < window; ++idx)
                    acc[idx + e] += c * d.coeff(idx);
        }
        if (i < k) d = ts_derivative(d);
    }
    for (const auto& c : acc)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace holonomica

#endif
