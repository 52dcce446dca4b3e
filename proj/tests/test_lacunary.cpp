#include <doctest.h>

#include "testutil.hpp"

using namespace holonomica;
using testutil::poly_from_text;

namespace {

// Order-1 annihilator p F' - p' F of a nonzero polynomial p.
OdeAnnihilator poly_annihilator(const PolyQ& p) {
    return make_ode({-lift_poly(p.derivative()), lift_poly(p)});
}

} // namespace

TEST_CASE("gap_count examples") {
    SupportProfile s = SupportProfile::of_poly(poly_from_text("1+z+z^2+z^3"));
    CHECK(gap_count(s, 0) == 1);
    CHECK(gap_count(s, 2) == 3);
    CHECK(gap_count(s, 3) == 4);
    CHECK(gap_count(s, 100) == 4);
    SupportProfile bounded = s;
    bounded.horizon = 50;
    CHECK(gap_count(bounded, 50) == 4);
    CHECK_THROWS_AS(gap_count(bounded, 51), precondition_error);
}

TEST_CASE("support_combine union and sumset") {
    SupportProfile p = SupportProfile::of_poly(poly_from_text("1+z^4"));
    SupportProfile q = SupportProfile::of_poly(poly_from_text("z+z^4"));
    SupportCombineResult add = support_combine(p, q, SupportOp::add);
    CHECK(add.combined.exponents == std::vector<std::uint64_t>{0, 1, 4});
    CHECK(add.bound_holds);
    SupportCombineResult mul = support_combine(p, q, SupportOp::mul);
    CHECK(mul.combined.exponents == std::vector<std::uint64_t>{1, 4, 5, 8});
    CHECK(mul.bound_holds);
    for (const auto& sample : mul.samples) CHECK(sample.holds);
}

TEST_CASE("support_combine horizon propagation") {
    SupportProfile p = SupportProfile::of_poly(poly_from_text("1+z^2"));
    SupportProfile q = p;
    q.horizon = 30;
    SupportCombineResult r = support_combine(p, q, SupportOp::mul);
    REQUIRE(r.combined.horizon.has_value());
    CHECK(*r.combined.horizon == 30);
    SupportProfile q2 = p;
    q2.horizon = 10;
    SupportCombineResult r2 = support_combine(q, q2, SupportOp::add);
    CHECK(*r2.combined.horizon == 10);
}

TEST_CASE("counting inequalities on random sparse pairs") {
    for (int trial = 0; trial < 50; ++trial) {
        PolyQ a = testutil::random_sparse_poly(2000, 8);
        PolyQ b = testutil::random_sparse_poly(2000, 8);
        SupportProfile pa = SupportProfile::of_poly(a);
        SupportProfile pb = SupportProfile::of_poly(b);
        CHECK(support_combine(pa, pb, SupportOp::add).bound_holds);
        CHECK(support_combine(pa, pb, SupportOp::mul).bound_holds);
        // The combined profile over-approximates the true support.
        SupportProfile exact = SupportProfile::of_poly(a * b);
        SupportCombineResult approx = support_combine(pa, pb, SupportOp::mul);
        for (auto e : exact.exponents)
            CHECK(std::binary_search(approx.combined.exponents.begin(),
                                     approx.combined.exponents.end(), e));
    }
}

TEST_CASE("lacunarity_evidence is explicitly non-probative") {
    SupportProfile dense = SupportProfile::of_poly(poly_from_text("1+z+z^2+z^3"));
    LacunarityEvidence ev = lacunarity_evidence(dense, Rat(1, 2), {1, 2, 3});
    CHECK_FALSE(ev.is_proof);
    REQUIRE(ev.rows.size() == 3);
    CHECK(ev.rows[0].count == 2);
    CHECK(ev.rows[0].non_small);
    CHECK_THROWS_AS(lacunarity_evidence(dense, Rat(0), {1}), precondition_error);
    CHECK_THROWS_AS(lacunarity_evidence(dense, Rat(-1, 2), {1}), precondition_error);
}

TEST_CASE("polynomiality certificate for Pell polynomials") {
    for (std::int64_t n : {3, 7}) {
        PellWitness w = pell_generate(n);
        Recurrence rec = ode_to_recurrence(poly_annihilator(w.x));
        std::vector<GaussRat> initial;
        TruncSeries truth = ts_from_poly(w.x, 2 * rec.order() + 4);
        for (std::size_t j = 0; j < rec.order(); ++j) initial.push_back(truth.coeff(j));
        PolynomialityCertificate cert = polynomiality_certificate(rec, initial, 200);
        CHECK(cert.verdict == PolyVerdict::polynomial);
        CHECK(cert.degree == w.x.degree());
        CHECK(cert.m >= cert.B);
    }
}

TEST_CASE("polynomiality certificate for a dense polynomial") {
    PolyQ p = poly_from_text("1+z+z^2+z^3");
    Recurrence rec = ode_to_recurrence(poly_annihilator(p));
    std::vector<GaussRat> initial;
    for (std::size_t j = 0; j < rec.order(); ++j)
        initial.push_back(GaussRat(p.coeff(j)));
    PolynomialityCertificate cert = polynomiality_certificate(rec, initial, 100);
    CHECK(cert.verdict == PolyVerdict::polynomial);
    CHECK(cert.degree == 3);
}

TEST_CASE("no certificate for the exponential within any finite horizon") {
    Recurrence rec = ode_to_recurrence(testutil::ode_from_text({"-1", "1"}));
    PolynomialityCertificate cert =
        polynomiality_certificate(rec, {GaussRat(1)}, kDefaultCertificateHorizon);
    CHECK(cert.verdict == PolyVerdict::no_certificate);
    CHECK(cert.horizon == kDefaultCertificateHorizon);
}

TEST_CASE("zero function certificate") {
    // a_{n+1} = a_n with a_0 = 0: the zero polynomial, sentinel degree.
    Recurrence rec = make_recurrence({testutil::polyg_from_text("-1"),
                                      testutil::polyg_from_text("1")});
    PolynomialityCertificate cert = polynomiality_certificate(rec, {GaussRat(0)}, 50);
    CHECK(cert.verdict == PolyVerdict::polynomial);
    CHECK(cert.degree == kZeroPolyDegree);
}
