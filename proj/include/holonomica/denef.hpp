#ifndef HOLONOMICA_DENEF_HPP
#define HOLONOMICA_DENEF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "holonomica/pell.hpp"

namespace holonomica {

// Definability witness for the formula xi(t): a Pell pair (x_t, y_t) plus
// f with (z-1) f = y_t - t, certifying y_t(1) = t.
struct DenefWitness {
    std::int64_t t = 0;
    PellWitness pell;
    PolyQ f;
};

// f = (y - lambda)/(z - 1), defined exactly when y(1) = lambda.
inline PolyQ eval_at_one_divide(const PolyQ& y, const Rat& lambda) {
    Rat rem = y.eval(Rat(1)) - lambda;
    if (rem != 0)
        throw precondition_error("NOT_DIVISIBLE",
                                 "y(1) - lambda = " + rat_to_string(rem));
    PolyQ z_minus_1 = PolyQ::variable() - PolyQ::one();
    auto [q, r] = PolyQ::divrem(y - PolyQ::constant(lambda), z_minus_1);
    if (!r.is_zero()) throw std::logic_error("eval_at_one_divide: nonzero remainder");
    return q;
}

inline DenefWitness denef_witness(std::int64_t t) {
    DenefWitness w;
    w.t = t;
    w.pell = pell_generate(t);
    w.f = eval_at_one_divide(w.pell.y, Rat(Int(t)));
    return w;
}

struct WitnessVerdict {
    bool ok = true;
    std::vector<std::string> reasons;

    explicit operator bool() const { return ok; }
};

// Re-checks every conjunct of xi(t) from scratch.
inline WitnessVerdict witness_verify(const DenefWitness& w) {
    WitnessVerdict v;
    if (!pell_verify_poly(w.pell.x, w.pell.y)) {
        v.ok = false;
        v.reasons.push_back("pell: x^2 - (z^2-1) y^2 != 1");
    }
    if (w.pell.y.eval(Rat(1)) != Rat(Int(w.t))) {
        v.ok = false;
        v.reasons.push_back("evaluation: y(1) != t");
    }
    PolyQ z_minus_1 = PolyQ::variable() - PolyQ::one();
    if (z_minus_1 * w.f != w.pell.y - PolyQ::constant(Rat(Int(w.t)))) {
        v.ok = false;
        v.reasons.push_back("divisibility: (z-1) f != y - t");
    }
    return v;
}

// Human-readable proof transcript, one line per verified conjunct.
inline std::vector<std::string> witness_transcript(const DenefWitness& w) {
    std::vector<std::string> out;
    out.push_back("xi(" + std::to_string(w.t) + "):");
    out.push_back("  p(y): exists x, x^2 - (z^2-1) y^2 = 1   [x = x_" +
                  std::to_string(w.t) + ", y = y_" + std::to_string(w.t) + ": verified]");
    out.push_back("  y(1) = " + rat_to_string(w.pell.y.eval(Rat(1))) +
                  " = t   [verified]");
    out.push_back("  exists f, (z-1) f = y - t   [f of degree " +
                  std::to_string(w.f.degree()) + ": verified]");
    return out;
}

} // namespace holonomica

#endif
