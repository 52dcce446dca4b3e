#ifndef HOLONOMICA_IO_HPP
#define HOLONOMICA_IO_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "holonomica/denef.hpp"
#include "holonomica/lacunary.hpp"
#include "holonomica/pell.hpp"

namespace holonomica {

using njson = nlohmann::ordered_json;

// --------------------------------------------------------------------------
// Coefficients
// --------------------------------------------------------------------------

template <class C>
C parse_coeff(const std::string& s);

template <>
inline GaussRat parse_coeff<GaussRat>(const std::string& s) {
    return parse_gauss(s);
}

template <>
inline Rat parse_coeff<Rat>(const std::string& s) {
    GaussRat g = parse_gauss(s);
    if (g.im != 0) throw input_error("expected a real rational, got '" + s + "'");
    return g.re;
}

// --------------------------------------------------------------------------
// Polynomials: canonical JSON {"coeffs": [[e, "c"], ...]}, text form
// "c0 + c1*z + c5*z^5" accepted on input.
// --------------------------------------------------------------------------

namespace iodetail {

inline std::string strip_spaces(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t') t += c;
    return t;
}

// Splits on top-level '+'/'-' (not inside parentheses, not after '^', '*',
// '/', or another sign).
inline std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool sign = (c == '+' || c == '-') && depth == 0 && i > 0;
        if (sign) {
            char prev = s[i - 1];
            if (prev == '^' || prev == '*' || prev == '/' || prev == '+' || prev == '-')
                sign = false;
        }
        if (sign) {
            terms.push_back(cur);
            cur.clear();
            cur += c;
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) terms.push_back(cur);
    return terms;
}

} // namespace iodetail

template <class C>
Poly<C> parse_poly_text(const std::string& input) {
    std::string s = iodetail::strip_spaces(input);
    if (s.empty()) throw input_error("empty polynomial");
    if (s == "0") return Poly<C>::zero();
    Poly<C> result;
    for (const std::string& term : iodetail::split_terms(s)) {
        bool neg = false;
        std::string t = term;
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
            neg = t[0] == '-';
            t = t.substr(1);
        }
        if (t.empty()) throw input_error("bad polynomial term in '" + input + "'");
        // Locate the variable (z or n) outside parentheses.
        std::size_t varpos = std::string::npos;
        int depth = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == '(') ++depth;
            if (t[i] == ')') --depth;
            if (depth == 0 && (t[i] == 'z' || t[i] == 'n')) {
                varpos = i;
                break;
            }
        }
        std::string coeffstr;
        std::uint64_t exp = 0;
        if (varpos == std::string::npos) {
            coeffstr = t;
        } else {
            coeffstr = t.substr(0, varpos);
            if (!coeffstr.empty() && coeffstr.back() == '*') coeffstr.pop_back();
            std::string rest = t.substr(varpos + 1);
            if (rest.empty()) {
                exp = 1;
            } else if (rest[0] == '^') {
                try {
                    exp = std::stoull(rest.substr(1));
                } catch (const std::exception&) {
                    throw input_error("bad exponent in '" + term + "'");
                }
            } else {
                throw input_error("bad polynomial term '" + term + "'");
            }
        }
        C coeff;
        if (coeffstr.empty()) {
            coeff = C(1);
        } else if (coeffstr.front() == '(' && coeffstr.back() == ')') {
            coeff = parse_coeff<C>(coeffstr.substr(1, coeffstr.size() - 2));
        } else {
            coeff = parse_coeff<C>(coeffstr);
        }
        if (neg) coeff = -coeff;
        result += Poly<C>::monomial(exp, coeff);
    }
    return result;
}

template <class C>
njson poly_to_json(const Poly<C>& p) {
    njson coeffs = njson::array();
    for (const auto& [e, c] : p.terms())
        coeffs.push_back(njson::array({e, coeff_to_string(c)}));
    return njson{{"coeffs", std::move(coeffs)}};
}

template <class C>
Poly<C> poly_from_json(const njson& j) {
    if (j.is_string()) return parse_poly_text<C>(j.get<std::string>());
    if (j.is_object() && j.contains("coeffs")) {
        Poly<C> p;
        for (const auto& entry : j.at("coeffs")) {
            if (!entry.is_array() || entry.size() != 2)
                throw input_error("bad coefficient entry in polynomial JSON");
            std::uint64_t e = entry.at(0).get<std::uint64_t>();
            C c = parse_coeff<C>(entry.at(1).get<std::string>());
            if (!coeff_is_zero(p.coeff(e)))
                throw input_error("duplicate exponent in polynomial JSON");
            p.set_coeff(e, std::move(c));
        }
        return p;
    }
    throw input_error("expected a polynomial (string or {\"coeffs\": ...})");
}

template <class C>
std::string poly_to_text(const Poly<C>& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        std::string cs = coeff_to_string(c);
        bool needs_parens = cs.find('+') != std::string::npos ||
                            cs.find('-') != std::string::npos;
        if (!out.empty()) {
            if (!needs_parens && cs[0] == '-') {
                out += " - ";
                cs = cs.substr(1);
            } else {
                out += " + ";
            }
        }
        if (needs_parens && e > 0) cs = "(" + cs + ")";
        if (e == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// Rational functions and quadratic-ring elements
// --------------------------------------------------------------------------

template <class C>
njson ratfunc_to_json(const RatFunc<C>& f) {
    if (f.is_polynomial()) return poly_to_json(f.num());
    return njson{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

template <class C>
RatFunc<C> ratfunc_from_json(const njson& j) {
    if (j.is_object() && j.contains("num"))
        return RatFunc<C>(poly_from_json<C>(j.at("num")), poly_from_json<C>(j.at("den")));
    return RatFunc<C>(poly_from_json<C>(j));
}

inline njson quad_to_json(const QuadElem& u) {
    return njson{{"a", ratfunc_to_json(u.a)},
                 {"b", ratfunc_to_json(u.b)},
                 {"mode", u.mode == QuadMode::poly ? "poly" : "ratfunc"}};
}

inline QuadElem quad_from_json(const njson& j) {
    std::string mode = j.value("mode", "poly");
    if (mode != "poly" && mode != "ratfunc")
        throw input_error("bad quad mode '" + mode + "'");
    return QuadElem(ratfunc_from_json<Rat>(j.at("a")), ratfunc_from_json<Rat>(j.at("b")),
                    mode == "poly" ? QuadMode::poly : QuadMode::ratfunc);
}

// --------------------------------------------------------------------------
// Holonomic objects
// --------------------------------------------------------------------------

inline njson ode_to_json(const OdeAnnihilator& o) {
    if (o.zero_function) return njson{{"zero", true}};
    njson P = njson::array();
    for (const auto& p : o.P) P.push_back(poly_to_json(p));
    return njson{{"order", o.order()}, {"P", std::move(P)}};
}

inline OdeAnnihilator ode_from_json(const njson& j) {
    if (j.is_object() && j.value("zero", false)) return OdeAnnihilator::zero_annihilator();
    if (!j.is_object() || !j.contains("P"))
        throw input_error("expected an ODE annihilator {\"order\":k,\"P\":[...]}");
    std::vector<PolyG> P;
    for (const auto& entry : j.at("P")) P.push_back(poly_from_json<GaussRat>(entry));
    if (j.contains("order") &&
        j.at("order").get<std::size_t>() + 1 != P.size())
        throw input_error("ODE order does not match coefficient count");
    return make_ode(std::move(P));
}

inline njson recurrence_to_json(const Recurrence& r) {
    njson p = njson::array();
    for (const auto& q : r.p) p.push_back(poly_to_json(q));
    njson boundary = njson::array();
    for (const auto& rel : r.boundary) {
        njson terms = njson::array();
        for (const auto& [idx, c] : rel.terms)
            terms.push_back(njson::array({idx, gauss_to_string(c)}));
        boundary.push_back(std::move(terms));
    }
    return njson{{"order", r.order()}, {"p", std::move(p)}, {"boundary", std::move(boundary)}};
}

inline Recurrence recurrence_from_json(const njson& j) {
    if (!j.is_object() || !j.contains("p"))
        throw input_error("expected a recurrence {\"order\":k,\"p\":[...]}");
    std::vector<PolyG> p;
    for (const auto& entry : j.at("p")) p.push_back(poly_from_json<GaussRat>(entry));
    std::vector<BoundaryRelation> boundary;
    if (j.contains("boundary"))
        for (const auto& rel : j.at("boundary")) {
            BoundaryRelation b;
            for (const auto& term : rel)
                b.terms.emplace_back(term.at(0).get<std::uint64_t>(),
                                     parse_gauss(term.at(1).get<std::string>()));
            boundary.push_back(std::move(b));
        }
    return make_recurrence(std::move(p), std::move(boundary));
}

inline njson series_to_json(const TruncSeries& s) {
    njson a = njson::array();
    for (const auto& c : s.a) a.push_back(gauss_to_string(c));
    return njson{{"T", s.T()}, {"a", std::move(a)}};
}

inline TruncSeries series_from_json(const njson& j) {
    if (!j.is_object() || !j.contains("a"))
        throw input_error("expected a truncated series {\"T\":T,\"a\":[...]}");
    std::vector<GaussRat> coeffs;
    for (const auto& entry : j.at("a")) coeffs.push_back(parse_gauss(entry.get<std::string>()));
    if (j.contains("T") && j.at("T").get<std::size_t>() != coeffs.size())
        throw input_error("series T does not match coefficient count");
    return TruncSeries(std::move(coeffs));
}

// --------------------------------------------------------------------------
// Pell and Denef objects
// --------------------------------------------------------------------------

inline njson pell_witness_to_json(const PellWitness& w) {
    return njson{{"epsilon", w.epsilon},
                 {"n", w.n},
                 {"x", poly_to_json(w.x)},
                 {"y", poly_to_json(w.y)}};
}

inline PellWitness pell_witness_from_json(const njson& j) {
    PellWitness w;
    w.epsilon = j.value("epsilon", 1);
    w.n = j.at("n").get<std::int64_t>();
    w.x = poly_from_json<Rat>(j.at("x"));
    w.y = poly_from_json<Rat>(j.at("y"));
    return w;
}

inline njson ext_series_to_json(const ExtSeries& s) {
    njson out = njson::object();
    for (const auto& [e, v] : s) out[std::to_string(e)] = series_to_json(v);
    return out;
}

inline ExtSeries ext_series_from_json(const njson& j) {
    ExtSeries s;
    for (auto it = j.begin(); it != j.end(); ++it)
        s.emplace(std::stoi(it.key()), series_from_json(it.value()));
    return s;
}

inline njson entire_to_json(const EntirePellData& d) {
    return njson{{"epsilon", d.epsilon}, {"n", d.n},     {"h", poly_to_json(d.h)},
                 {"T", d.T},             {"f", ext_series_to_json(d.f)},
                 {"g", ext_series_to_json(d.g)}};
}

inline EntirePellData entire_from_json(const njson& j) {
    EntirePellData d;
    d.epsilon = j.at("epsilon").get<int>();
    d.n = j.at("n").get<std::int64_t>();
    d.h = poly_from_json<Rat>(j.at("h"));
    d.T = j.at("T").get<std::size_t>();
    d.f = ext_series_from_json(j.at("f"));
    d.g = ext_series_from_json(j.at("g"));
    return d;
}

inline njson denef_witness_to_json(const DenefWitness& w) {
    return njson{{"t", w.t},
                 {"pell", pell_witness_to_json(w.pell)},
                 {"f", poly_to_json(w.f)}};
}

inline DenefWitness denef_witness_from_json(const njson& j) {
    DenefWitness w;
    w.t = j.at("t").get<std::int64_t>();
    w.pell = pell_witness_from_json(j.at("pell"));
    w.f = poly_from_json<Rat>(j.at("f"));
    return w;
}

// --------------------------------------------------------------------------
// Lacunary objects
// --------------------------------------------------------------------------

inline njson support_to_json(const SupportProfile& p) {
    njson out{{"exponents", p.exponents}};
    if (p.horizon)
        out["horizon"] = *p.horizon;
    else
        out["horizon"] = nullptr;
    return out;
}

inline SupportProfile support_from_json(const njson& j) {
    SupportProfile p;
    for (const auto& e : j.at("exponents")) p.exponents.push_back(e.get<std::uint64_t>());
    for (std::size_t i = 1; i < p.exponents.size(); ++i)
        if (p.exponents[i] <= p.exponents[i - 1])
            throw input_error("support exponents must be strictly increasing");
    if (j.contains("horizon") && !j.at("horizon").is_null()) {
        p.horizon = j.at("horizon").get<std::uint64_t>();
        if (!p.exponents.empty() && p.exponents.back() > *p.horizon)
            throw input_error("support exponent beyond horizon");
    }
    return p;
}

inline njson certificate_to_json(const PolynomialityCertificate& c) {
    njson out;
    out["verdict"] =
        c.verdict == PolyVerdict::polynomial ? "POLYNOMIAL" : "NO_CERTIFICATE";
    if (c.verdict == PolyVerdict::polynomial) {
        out["degree"] = c.degree;
        out["m"] = c.m;
    }
    out["B"] = c.B;
    out["H"] = c.horizon;
    return out;
}

inline njson combine_result_to_json(const SupportCombineResult& r) {
    njson samples = njson::array();
    for (const auto& s : r.samples)
        samples.push_back(njson{{"x", s.x},
                                {"N_p", s.count_p},
                                {"N_q", s.count_q},
                                {"N_combined", s.count_combined},
                                {"bound", s.bound},
                                {"holds", s.holds}});
    return njson{{"support", support_to_json(r.combined)},
                 {"samples", std::move(samples)},
                 {"bound_holds", r.bound_holds}};
}

inline njson evidence_to_json(const LacunarityEvidence& ev) {
    njson rows = njson::array();
    for (const auto& r : ev.rows)
        rows.push_back(njson{{"x", r.x},
                             {"N", r.count},
                             {"ratio", r.ratio},
                             {"non_small", r.non_small}});
    return njson{{"eps", rat_to_string(ev.eps)},
                 {"rows", std::move(rows)},
                 {"finite_horizon_evidence_only", !ev.is_proof}};
}

} // namespace holonomica

#endif
