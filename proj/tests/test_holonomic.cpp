#include <doctest.h>

#include "testutil.hpp"

using namespace holonomica;
using testutil::ode_from_text;
using testutil::poly_from_text;
using testutil::polyg_from_text;

namespace {

Recurrence rec_from_text(const std::vector<std::string>& coeffs) {
    std::vector<PolyG> p;
    for (const auto& s : coeffs) p.push_back(polyg_from_text(s));
    return make_recurrence(std::move(p));
}

} // namespace

TEST_CASE("normalization: content, common factors, sign") {
    // 2(z-1) F' - 2(z-1) F reduces to F' - F.
    OdeAnnihilator o = ode_from_text({"-2*z+2", "2*z-2"});
    CHECK(o == ode_from_text({"-1", "1"}));
    // Sign rule: top leading coefficient gets a positive real part.
    CHECK(ode_from_text({"1", "-1"}).P[1] == polyg_from_text("1"));
    // Purely imaginary leading coefficient: positive imaginary part.
    OdeAnnihilator im = ode_from_text({"1", "-i"});
    CHECK(im.P[1] == polyg_from_text("i"));
    CHECK(normalize_ode(o) == o);
}

TEST_CASE("ode_to_recurrence examples") {
    // F' - F  =>  (n+1) a_{n+1} - a_n.
    Recurrence r = ode_to_recurrence(ode_from_text({"-1", "1"}));
    CHECK(r.p == std::vector<PolyG>{polyg_from_text("-1"), polyg_from_text("n+1")});
    CHECK(r.boundary.empty());

    // (1-z) F' - F  =>  a_{n+1} = a_n after cancelling (n+1).
    Recurrence g = ode_to_recurrence(ode_from_text({"-1", "1-z"}));
    CHECK(g.p == std::vector<PolyG>{polyg_from_text("-1"), polyg_from_text("1")});

    // F'' - z F  =>  (n+3)(n+2) a_{n+3} - a_n with boundary 2 a_2 = 0.
    Recurrence a = ode_to_recurrence(ode_from_text({"-z", "0", "1"}));
    CHECK(a.order() == 3);
    CHECK(a.p[3] == polyg_from_text("n^2+5*n+6"));
    CHECK(a.p[0] == polyg_from_text("-1"));
    CHECK(a.p[1].is_zero());
    CHECK(a.p[2].is_zero());
    REQUIRE(a.boundary.size() == 1);
    REQUIRE(a.boundary[0].terms.size() == 1);
    CHECK(a.boundary[0].terms[0].first == 2);

    CHECK_THROWS_AS(ode_to_recurrence(OdeAnnihilator::zero_annihilator()),
                    precondition_error);
}

TEST_CASE("recurrence_to_ode examples") {
    // a_{n+1} = a_n  =>  (z-1) F' + F after sign normalization.
    CHECK(recurrence_to_ode(rec_from_text({"-1", "1"})) == ode_from_text({"-1", "1-z"}));
    // (n+1) a_{n+1} = a_n  =>  F' - F.
    CHECK(recurrence_to_ode(rec_from_text({"-1", "n+1"})) == ode_from_text({"-1", "1"}));
    // a_{n+1} = 0  =>  F' = 0 (only a_0 survives, but boundary-free order 1).
    CHECK(recurrence_to_ode(rec_from_text({"0", "1"})) == ode_from_text({"0", "1"}));
}

TEST_CASE("round trip ode -> recurrence -> unroll matches ground truth") {
    const std::size_t T = 60;
    for (const auto& entry : testutil::corpus(T)) {
        CAPTURE(entry.name);
        Recurrence rec = ode_to_recurrence(entry.ode);
        TruncSeries got = testutil::unroll_against_truth(rec, entry.series, T);
        CHECK(got == entry.series);
    }
}

TEST_CASE("round trip recurrence -> ode annihilates the ground truth") {
    const std::size_t T = 80;
    for (const auto& entry : testutil::corpus(T)) {
        CAPTURE(entry.name);
        Recurrence rec = ode_to_recurrence(entry.ode);
        OdeAnnihilator back = recurrence_to_ode(rec);
        CHECK(ode_series_check(back, entry.series));
    }
}

TEST_CASE("recurrence_unroll error paths") {
    // (n+1) a_{n+1} = a_n with wrong extra initial data is inconsistent.
    Recurrence r = rec_from_text({"-1", "n+1"});
    std::vector<GaussRat> bad{GaussRat(1), GaussRat(7)};
    CHECK_THROWS_AS(recurrence_unroll(r, bad, 5), precondition_error);
    // Too little initial data.
    CHECK_THROWS_AS(recurrence_unroll(r, {}, 5), precondition_error);
    // (n-2) a_{n+1} = a_n stalls at n = 2 unless a_3 is supplied.
    Recurrence stall = rec_from_text({"-1", "n-2"});
    std::vector<GaussRat> init{GaussRat(1)};
    try {
        recurrence_unroll(stall, init, 5);
        FAIL("expected UNDETERMINED");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.code()) == "UNDETERMINED");
    }
}

TEST_CASE("ode_series_check accepts solutions and rejects others") {
    OdeAnnihilator expo = ode_from_text({"-1", "1"});
    CHECK(ode_series_check(expo, testutil::exp_series(30)));
    CHECK_FALSE(ode_series_check(expo, testutil::geometric_series(30)));
    CHECK(ode_series_check(OdeAnnihilator::zero_annihilator(), ts_zero(10)));
    CHECK_FALSE(ode_series_check(OdeAnnihilator::zero_annihilator(), ts_one(10)));
    CHECK_THROWS_AS(ode_series_check(expo, ts_one(1)), precondition_error);
}

TEST_CASE("annihilator_of_ratfunc examples") {
    PolyG z = PolyG::variable();
    RatFuncG geom(PolyG::one(), PolyG::one() - z);
    OdeAnnihilator o = annihilator_of_ratfunc(geom);
    CHECK(o == ode_from_text({"-1", "1-z"}));
    CHECK(ode_series_check(o, testutil::geometric_series(40)));
}

TEST_CASE("closure under addition") {
    const std::size_t T = 120;
    auto corpus = testutil::corpus(T);
    for (const auto& f : corpus)
        for (const auto& g : corpus) {
            CAPTURE(f.name);
            CAPTURE(g.name);
            OdeAnnihilator sum = annihilator_add(f.ode, g.ode);
            CHECK(sum.order() <= f.ode.order() + g.ode.order());
            CHECK(ode_series_check(sum, ts_add(f.series, g.series)));
        }
}

TEST_CASE("closure under multiplication") {
    const std::size_t T = 120;
    auto corpus = testutil::corpus(T);
    for (const auto& f : corpus)
        for (const auto& g : corpus) {
            CAPTURE(f.name);
            CAPTURE(g.name);
            OdeAnnihilator prod = annihilator_mul(f.ode, g.ode);
            CHECK(prod.order() <= f.ode.order() * g.ode.order());
            CHECK(ode_series_check(prod, ts_mul(f.series, g.series)));
        }
}

TEST_CASE("closure shortcuts for the zero function") {
    OdeAnnihilator z = OdeAnnihilator::zero_annihilator();
    OdeAnnihilator expo = ode_from_text({"-1", "1"});
    CHECK(annihilator_add(z, expo) == expo);
    CHECK(annihilator_add(expo, z) == expo);
    CHECK(annihilator_mul(z, expo).zero_function);
    CHECK(annihilator_mul(expo, z).zero_function);
}

TEST_CASE("companion module reproduces the original operator") {
    for (const auto& entry : testutil::corpus(16)) {
        CAPTURE(entry.name);
        DModule m = companion_module(entry.ode);
        std::vector<RatFuncG> e(m.rank);
        e[0] = RatFuncG::constant(GaussRat(1));
        OdeAnnihilator back = dmodule_annihilator(m, e);
        CHECK(back.order() <= entry.ode.order());
        CHECK(ode_series_check(back, entry.series.truncated(60)));
    }
}
