#ifndef HOLONOMICA_LACUNARY_HPP
#define HOLONOMICA_LACUNARY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "holonomica/holonomic.hpp"

namespace holonomica {

// Support of a coefficient sequence, possibly only known up to a finite
// horizon. No horizon means the support is known completely (polynomials).
struct SupportProfile {
    std::vector<std::uint64_t> exponents;  // strictly increasing
    std::optional<std::uint64_t> horizon;

    static SupportProfile of_poly(const PolyQ& p) {
        SupportProfile s;
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            s.exponents.push_back(e);
        }
        return s;
    }
};

// N_f(x): number of support elements <= x.
inline std::uint64_t gap_count(const SupportProfile& p, std::uint64_t x) {
    if (p.horizon && x > *p.horizon)
        throw precondition_error("BEYOND_HORIZON",
                                 "x exceeds the support horizon");
    auto it = std::upper_bound(p.exponents.begin(), p.exponents.end(), x);
    return static_cast<std::uint64_t>(it - p.exponents.begin());
}

enum class SupportOp { add, mul };

struct SupportSample {
    std::uint64_t x;
    std::uint64_t count_p;
    std::uint64_t count_q;
    std::uint64_t count_combined;
    std::uint64_t bound;
    bool holds;
};

struct SupportCombineResult {
    SupportProfile combined;  // upper bound on the true support
    std::vector<SupportSample> samples;
    bool bound_holds = true;
};

// add -> union, mul -> sumset (truncated to the horizon); the report checks
// the counting inequalities N_{f+g} <= N_f + N_g and N_{fg} <= N_f N_g at
// sampled points.
inline SupportCombineResult support_combine(const SupportProfile& p,
                                            const SupportProfile& q, SupportOp op) {
    std::optional<std::uint64_t> horizon;
    if (p.horizon && q.horizon)
        horizon = std::min(*p.horizon, *q.horizon);
    else if (p.horizon)
        horizon = p.horizon;
    else if (q.horizon)
        horizon = q.horizon;

    std::set<std::uint64_t> combined;
    if (op == SupportOp::add) {
        for (auto e : p.exponents)
            if (!horizon || e <= *horizon) combined.insert(e);
        for (auto e : q.exponents)
            if (!horizon || e <= *horizon) combined.insert(e);
    } else {
        for (auto a : p.exponents)
            for (auto b : q.exponents)
                if (!horizon || a + b <= *horizon) combined.insert(a + b);
    }
    SupportCombineResult r;
    r.combined.exponents.assign(combined.begin(), combined.end());
    r.combined.horizon = horizon;

    std::vector<std::uint64_t> grid{1, 2, 5, 10, 100, 1000, 10000};
    std::uint64_t top = horizon ? *horizon
                                : (r.combined.exponents.empty() ? 0 : r.combined.exponents.back());
    for (auto x : grid) {
        if (x > top) break;
        SupportSample s;
        s.x = x;
        s.count_p = gap_count(p, x);
        s.count_q = gap_count(q, x);
        s.count_combined = gap_count(r.combined, x);
        s.bound = op == SupportOp::add ? s.count_p + s.count_q : s.count_p * s.count_q;
        s.holds = s.count_combined <= s.bound;
        r.bound_holds = r.bound_holds && s.holds;
        r.samples.push_back(s);
    }
    if (top > 0) {
        SupportSample s;
        s.x = top;
        s.count_p = gap_count(p, top);
        s.count_q = gap_count(q, top);
        s.count_combined = gap_count(r.combined, top);
        s.bound = op == SupportOp::add ? s.count_p + s.count_q : s.count_p * s.count_q;
        s.holds = s.count_combined <= s.bound;
        r.bound_holds = r.bound_holds && s.holds;
        r.samples.push_back(s);
    }
    return r;
}

struct EvidenceRow {
    std::uint64_t x;
    std::uint64_t count;
    double ratio;  // N_f(x) / x^eps, reported numerically
    bool non_small;
};

struct LacunarityEvidence {
    Rat eps;
    std::vector<EvidenceRow> rows;
    // Finite-horizon evidence only, never a proof of A_0 membership.
    bool is_proof = false;
};

inline LacunarityEvidence lacunarity_evidence(const SupportProfile& p, const Rat& eps,
                                              const std::vector<std::uint64_t>& grid) {
    if (eps <= 0)
        throw precondition_error("BAD_EPSILON", "eps must be positive");
    LacunarityEvidence ev;
    ev.eps = eps;
    double e = static_cast<double>(rat_num(eps).convert_to<long long>()) /
               static_cast<double>(rat_den(eps).convert_to<long long>());
    for (auto x : grid) {
        if (p.horizon && x > *p.horizon)
            throw precondition_error("BEYOND_HORIZON", "grid point exceeds horizon");
        EvidenceRow row;
        row.x = x;
        row.count = gap_count(p, x);
        double denom = std::pow(static_cast<double>(x), e);
        row.ratio = denom > 0 ? static_cast<double>(row.count) / denom
                              : static_cast<double>(row.count);
        row.non_small = row.ratio > 1.0;
        ev.rows.push_back(row);
    }
    return ev;
}

enum class PolyVerdict { polynomial, no_certificate };

// POLYNOMIAL verdicts are proofs; NO_CERTIFICATE at horizon H is not a
// disproof (eventual vanishing is not decidable by bounded search).
struct PolynomialityCertificate {
    PolyVerdict verdict = PolyVerdict::no_certificate;
    std::int64_t degree = kZeroPolyDegree;  // sentinel for the zero polynomial
    std::uint64_t m = 0;                    // start of the certified zero window
    std::uint64_t B = 0;                    // index past all integer roots of p_k
    std::uint64_t horizon = 0;
};

inline constexpr std::uint64_t kDefaultCertificateHorizon = 500;

// Decision procedure by forward solvability: compute B past every
// nonnegative integer root of the leading coefficient, unroll to the
// horizon, and look for an order-long window of zeros at index >= B. From
// such a window forward solvability forces every later coefficient to
// vanish.
inline PolynomialityCertificate polynomiality_certificate(
    const Recurrence& rec, const std::vector<GaussRat>& initial, std::uint64_t H,
    const std::map<std::uint64_t, GaussRat>& supplied = {}) {
    const std::size_t k = rec.order();
    // Integer roots of p_k. For Gaussian coefficients an integer root must
    // kill both components; enumerate on one nonzero component and filter.
    Int max_root = -1;
    {
        PolyQ probe;
        PolyQ re, im;
        for (const auto& [e, c] : rec.p[k].terms()) {
            re.set_coeff(e, c.re);
            im.set_coeff(e, c.im);
        }
        probe = re.is_zero() ? im : re;
        for (const Int& r : integer_roots(probe)) {
            if (r < 0) continue;
            if (rec.p[k].eval(GaussRat(Rat(r))).is_zero() && r > max_root) max_root = r;
        }
    }
    std::uint64_t B;
    {
        Int b = Int(k);
        if (max_root + 1 > b) b = max_root + 1;
        B = static_cast<std::uint64_t>(b.convert_to<unsigned long long>()) + 1;
    }
    std::vector<GaussRat> a = recurrence_unroll(rec, initial, H, supplied);

    PolynomialityCertificate cert;
    cert.B = B;
    cert.horizon = H;
    for (std::uint64_t m = B; m + k <= H + 1; ++m) {
        bool window = true;
        for (std::size_t j = 0; j < k; ++j)
            if (!a[m + j].is_zero()) {
                window = false;
                break;
            }
        if (!window) continue;
        // Certified: double-check the unrolled tail agrees.
        for (std::uint64_t j = m; j <= H; ++j)
            if (!a[j].is_zero())
                throw std::logic_error("polynomiality_certificate: tail not zero");
        cert.verdict = PolyVerdict::polynomial;
        cert.m = m;
        cert.degree = kZeroPolyDegree;
        for (std::uint64_t j = 0; j < m; ++j)
            if (!a[j].is_zero()) cert.degree = static_cast<std::int64_t>(j);
        return cert;
    }
    cert.verdict = PolyVerdict::no_certificate;
    return cert;
}

} // namespace holonomica

#endif
