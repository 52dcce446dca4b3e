#include <doctest.h>

#include "testutil.hpp"

using namespace holonomica;
using testutil::poly_from_text;

TEST_CASE("eval_at_one_divide examples") {
    // y_2 = 2z, y_2(1) = 2: f = (2z - 2)/(z - 1) = 2.
    CHECK(eval_at_one_divide(poly_from_text("2*z"), Rat(2)) == poly_from_text("2"));
    // y_3 = 4z^2 - 1: f = (4z^2 - 4)/(z - 1) = 4z + 4.
    CHECK(eval_at_one_divide(poly_from_text("4*z^2-1"), Rat(3)) == poly_from_text("4*z+4"));
    try {
        eval_at_one_divide(poly_from_text("2*z"), Rat(5));
        FAIL("expected NOT_DIVISIBLE");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.code()) == "NOT_DIVISIBLE");
    }
}

TEST_CASE("denef_witness structure and verification") {
    for (std::int64_t t : {-7, -1, 0, 1, 2, 3, 10, 41}) {
        CAPTURE(t);
        DenefWitness w = denef_witness(t);
        CHECK(w.t == t);
        CHECK(w.pell.n == t);
        WitnessVerdict v = witness_verify(w);
        CHECK(static_cast<bool>(v));
        CHECK(v.reasons.empty());
        // (z-1) f = y - t reconstructs exactly.
        PolyQ zm1 = PolyQ::variable() - PolyQ::one();
        CHECK(zm1 * w.f == w.pell.y - PolyQ::constant(Rat(Int(t))));
    }
}

TEST_CASE("tampered witnesses are rejected with the right reasons") {
    DenefWitness good = denef_witness(5);

    DenefWitness bad_pell = good;
    bad_pell.pell.x += PolyQ::one();
    WitnessVerdict v1 = witness_verify(bad_pell);
    CHECK_FALSE(v1.ok);
    REQUIRE(!v1.reasons.empty());
    CHECK(v1.reasons[0].find("pell") != std::string::npos);

    DenefWitness bad_eval = good;
    bad_eval.t = 6;  // y still evaluates to 5 at z = 1
    WitnessVerdict v2 = witness_verify(bad_eval);
    CHECK_FALSE(v2.ok);
    bool has_eval = false;
    for (const auto& r : v2.reasons)
        if (r.find("evaluation") != std::string::npos) has_eval = true;
    CHECK(has_eval);

    DenefWitness bad_f = good;
    bad_f.f += PolyQ::one();
    WitnessVerdict v3 = witness_verify(bad_f);
    CHECK_FALSE(v3.ok);
    REQUIRE(v3.reasons.size() == 1);
    CHECK(v3.reasons[0].find("divisibility") != std::string::npos);
}

TEST_CASE("witness transcript lists every conjunct") {
    DenefWitness w = denef_witness(3);
    std::vector<std::string> lines = witness_transcript(w);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0].find("xi(3)") != std::string::npos);
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(lines[i].find("verified") != std::string::npos);
}
