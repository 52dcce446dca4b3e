#ifndef HOLONOMICA_TESTUTIL_HPP
#define HOLONOMICA_TESTUTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "holonomica/holonomic.hpp"
#include "holonomica/io.hpp"
#include "holonomica/pell.hpp"

namespace testutil {

using namespace holonomica;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline Rat random_rat(int num_range = 20, int den_range = 6) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rat(num(rng()), den(rng()));
}

inline GaussRat random_gauss() { return GaussRat(random_rat(), random_rat()); }

inline PolyQ random_polyq(int max_deg = 6) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    PolyQ p;
    int d = deg(rng());
    for (int e = 0; e <= d; ++e) p.set_coeff(e, random_rat());
    return p;
}

inline PolyG random_polyg(int max_deg = 5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    PolyG p;
    int d = deg(rng());
    for (int e = 0; e <= d; ++e) p.set_coeff(e, random_gauss());
    return p;
}

inline PolyQ random_sparse_poly(std::uint64_t max_exp, int max_terms) {
    std::uniform_int_distribution<std::uint64_t> exp(0, max_exp);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(1, 9);
    PolyQ p;
    int t = nterms(rng());
    for (int i = 0; i < t; ++i) p.set_coeff(exp(rng()), Rat(coeff(rng())));
    return p;
}

inline PolyQ poly_from_text(const std::string& s) { return parse_poly_text<Rat>(s); }
inline PolyG polyg_from_text(const std::string& s) { return parse_poly_text<GaussRat>(s); }

// ---------------------------------------------------------------------------
// Ground-truth corpus: annihilators plus independently generated series.
// ---------------------------------------------------------------------------

struct CorpusEntry {
    std::string name;
    OdeAnnihilator ode;
    TruncSeries series;  // ground truth, generated without the ODE machinery
};

inline TruncSeries exp_series(std::size_t T) {
    TruncSeries s(T);
    GaussRat c(1);
    for (std::size_t n = 0; n < T; ++n) {
        s.a[n] = c;
        c = c / GaussRat(Rat(Int(n) + 1));
    }
    return s;
}

inline TruncSeries geometric_series(std::size_t T) {
    TruncSeries s(T);
    for (std::size_t n = 0; n < T; ++n) s.a[n] = GaussRat(1);
    return s;
}

// Airy-type solution of F'' = z F with F(0) = 1, F'(0) = 0.
inline TruncSeries airy_series(std::size_t T) {
    TruncSeries s(T);
    if (T > 0) s.a[0] = GaussRat(1);
    // a_n = a_{n-3} / (n (n-1)) with a_1 = a_2 = 0.
    for (std::size_t n = 3; n < T; ++n)
        s.a[n] = s.a[n - 3] / GaussRat(Rat(Int(n) * Int(n - 1)));
    if (T > 1) s.a[1] = GaussRat(0);
    if (T > 2) s.a[2] = GaussRat(0);
    return s;
}

inline OdeAnnihilator ode_from_text(const std::vector<std::string>& coeffs) {
    std::vector<PolyG> P;
    for (const auto& s : coeffs) P.push_back(polyg_from_text(s));
    return make_ode(std::move(P));
}

inline std::vector<CorpusEntry> corpus(std::size_t T) {
    std::vector<CorpusEntry> c;
    c.push_back({"exp", ode_from_text({"-1", "1"}), exp_series(T)});
    c.push_back({"geometric", ode_from_text({"-1", "1-z"}), geometric_series(T)});
    c.push_back({"airy", ode_from_text({"-z", "0", "1"}), airy_series(T)});
    c.push_back({"const", ode_from_text({"0", "1"}),
                 ts_from_poly(PolyQ::constant(Rat(7)), T)});
    PellWitness w7 = pell_generate(7);
    // Minimal order-1 annihilators p F' - p' F for the Pell polynomials.
    auto poly_ann = [](const PolyQ& p) {
        return make_ode({-lift_poly(p.derivative()), lift_poly(p)});
    };
    c.push_back({"x7", poly_ann(w7.x), ts_from_poly(w7.x, T)});
    c.push_back({"y7", poly_ann(w7.y), ts_from_poly(w7.y, T)});
    c.push_back({"W", ode_from_text({"-z", "z^2-1"}), series_W(T)});
    return c;
}

// Unrolls rec with initial data drawn from truth, supplying truth values
// wherever the leading coefficient vanishes.
inline TruncSeries unroll_against_truth(const Recurrence& rec, const TruncSeries& truth,
                                        std::size_t T) {
    std::vector<GaussRat> initial(truth.a.begin(),
                                  truth.a.begin() + std::min<std::size_t>(rec.order(), truth.T()));
    std::map<std::uint64_t, GaussRat> supplied;
    for (int attempt = 0; attempt < 200; ++attempt) {
        try {
            return TruncSeries(recurrence_unroll(rec, initial, T - 1, supplied));
        } catch (const precondition_error& e) {
            if (e.code() != "UNDETERMINED") throw;
            // Parse the stuck index from "... a_<idx> was not supplied".
            std::string msg = e.what();
            auto pos = msg.rfind("a_");
            std::size_t idx = std::stoull(msg.substr(pos + 2));
            supplied[idx] = truth.coeff(idx);
        }
    }
    throw std::runtime_error("unroll_against_truth: too many undetermined indices");
}

} // namespace testutil

#endif
