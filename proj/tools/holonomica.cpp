// holonomica: command-line surface for the library.
//
// Arguments holding structured data accept inline JSON, "-" for standard
// input, or a path to a JSON file; polynomial arguments additionally accept
// plain text like "2*z^2-1". Results go to standard output, diagnostics to
// standard error. Exit codes: 0 success, 1 verified-false, 2 malformed
// input, 3 precondition violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holonomica/io.hpp"

using namespace holonomica;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

njson load_arg(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(arg);
        if (in) {
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        } else {
            text = arg;
        }
    }
    njson j = njson::parse(text, nullptr, false);
    if (j.is_discarded() || j.is_number()) {
        // Not JSON, or a bare number like "0": treat as raw text
        // (polynomial syntax and the like).
        return njson(text);
    }
    return j;
}

void emit(const njson& j) { std::cout << j.dump(2) << "\n"; }

PolyQ load_polyq(const std::string& arg) { return poly_from_json<Rat>(load_arg(arg)); }

TruncSeries load_series_or_poly(const std::string& arg, std::size_t T) {
    njson j = load_arg(arg);
    if (j.is_object() && j.contains("a")) return series_from_json(j);
    return ts_from_poly(poly_from_json<GaussRat>(j), T);
}

std::vector<GaussRat> load_initial(const std::string& arg) {
    njson j = load_arg(arg);
    if (!j.is_array()) throw input_error("initial data must be a JSON array");
    std::vector<GaussRat> init;
    for (const auto& entry : j) {
        if (entry.is_number_integer())
            init.push_back(GaussRat(Rat(entry.get<long long>())));
        else
            init.push_back(parse_gauss(entry.get<std::string>()));
    }
    return init;
}

std::map<std::uint64_t, GaussRat> load_supplied(const std::string& arg) {
    std::map<std::uint64_t, GaussRat> m;
    if (arg.empty()) return m;
    njson j = load_arg(arg);
    if (!j.is_object()) throw input_error("supplied values must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        m.emplace(std::stoull(it.key()), parse_gauss(it.value().get<std::string>()));
    return m;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Pell, holonomic, and gap-analysis workbench"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // ----------------------------------------------------------------- pell
    auto* pell = app.add_subcommand("pell", "polynomial Pell equation");
    pell->require_subcommand(1);

    std::int64_t gen_n = 0;
    auto* pell_gen = pell->add_subcommand("gen", "generate (x_n, y_n)");
    pell_gen->add_option("n", gen_n, "index n")->required();
    pell_gen->callback([&] { emit(pell_witness_to_json(pell_generate(gen_n))); });

    std::vector<std::string> verify_args;
    auto* pell_verify = pell->add_subcommand("verify", "check x^2-(z^2-1)y^2 = 1");
    pell_verify->add_option("args", verify_args, "witness JSON, or two polynomials x y")
        ->expected(1, 2);
    pell_verify->callback([&] {
        PolyQ x, y;
        if (verify_args.size() == 1) {
            njson j = load_arg(verify_args[0]);
            x = poly_from_json<Rat>(j.at("x"));
            y = poly_from_json<Rat>(j.at("y"));
        } else {
            x = load_polyq(verify_args[0]);
            y = load_polyq(verify_args[1]);
        }
        bool ok = pell_verify_poly(x, y);
        emit(njson{{"ok", ok}});
        if (!ok) {
            std::cerr << "not a solution: x^2 - (z^2-1) y^2 != 1\n";
            exit_code = kExitFalse;
        }
    });

    std::vector<std::string> classify_args;
    auto* pell_classify_cmd = pell->add_subcommand("classify", "recover (epsilon, n)");
    pell_classify_cmd
        ->add_option("args", classify_args, "witness JSON, or two polynomials x y")
        ->expected(1, 2);
    pell_classify_cmd->callback([&] {
        PolyQ x, y;
        if (classify_args.size() == 1) {
            njson j = load_arg(classify_args[0]);
            x = poly_from_json<Rat>(j.at("x"));
            y = poly_from_json<Rat>(j.at("y"));
        } else {
            x = load_polyq(classify_args[0]);
            y = load_polyq(classify_args[1]);
        }
        PellClass c = pell_classify(x, y);
        emit(njson{{"epsilon", c.epsilon}, {"n", c.n}});
    });

    int ent_eps = 1;
    std::int64_t ent_n = 0;
    std::string ent_h = "0";
    std::size_t ent_T = 120;
    auto* pell_entire = pell->add_subcommand("entire", "truncated entire solution");
    pell_entire->add_option("epsilon", ent_eps, "+1 or -1")->required();
    pell_entire->add_option("n", ent_n, "index n")->required();
    pell_entire->add_option("hpoly", ent_h, "polynomial h");
    pell_entire->add_option("--order", ent_T, "truncation order T")->capture_default_str();
    pell_entire->callback([&] {
        emit(entire_to_json(pell_general_solution(ent_eps, ent_n, load_polyq(ent_h), ent_T)));
    });

    int wit_eps = 1;
    std::int64_t wit_n = 0;
    std::string wit_h = "0";
    std::size_t wit_T = 120;
    auto* pell_wit = pell->add_subcommand("witness-ode", "holonomic witnesses for f, g");
    pell_wit->add_option("epsilon", wit_eps, "+1 or -1")->required();
    pell_wit->add_option("n", wit_n, "index n")->required();
    pell_wit->add_option("hpoly", wit_h, "polynomial h");
    pell_wit->add_option("--order", wit_T, "self-check truncation order")
        ->capture_default_str();
    pell_wit->callback([&] {
        auto [f, g] = pell_holonomic_witness(wit_eps, wit_n, load_polyq(wit_h), wit_T);
        emit(njson{{"f_ode", ode_to_json(f)}, {"g_ode", ode_to_json(g)}});
    });

    // ----------------------------------------------------------------- holo
    auto* holo = app.add_subcommand("holo", "holonomic calculus");
    holo->require_subcommand(1);

    std::string o2r_arg;
    auto* holo_o2r = holo->add_subcommand("ode2rec", "ODE to coefficient recurrence");
    holo_o2r->add_option("ode", o2r_arg, "ODE JSON")->required();
    holo_o2r->callback(
        [&] { emit(recurrence_to_json(ode_to_recurrence(ode_from_json(load_arg(o2r_arg))))); });

    std::string r2o_arg;
    auto* holo_r2o = holo->add_subcommand("rec2ode", "recurrence to ODE");
    holo_r2o->add_option("rec", r2o_arg, "recurrence JSON")->required();
    holo_r2o->callback(
        [&] { emit(ode_to_json(recurrence_to_ode(recurrence_from_json(load_arg(r2o_arg))))); });

    std::string cl_a, cl_b;
    auto* holo_add = holo->add_subcommand("add", "annihilator of a sum");
    holo_add->add_option("f", cl_a, "ODE JSON for f")->required();
    holo_add->add_option("g", cl_b, "ODE JSON for g")->required();
    holo_add->callback([&] {
        emit(ode_to_json(
            annihilator_add(ode_from_json(load_arg(cl_a)), ode_from_json(load_arg(cl_b)))));
    });
    auto* holo_mul = holo->add_subcommand("mul", "annihilator of a product");
    holo_mul->add_option("f", cl_a, "ODE JSON for f")->required();
    holo_mul->add_option("g", cl_b, "ODE JSON for g")->required();
    holo_mul->callback([&] {
        emit(ode_to_json(
            annihilator_mul(ode_from_json(load_arg(cl_a)), ode_from_json(load_arg(cl_b)))));
    });

    std::string chk_ode, chk_series;
    std::size_t chk_T = 120;
    auto* holo_check = holo->add_subcommand("check", "verify a series against an ODE");
    holo_check->add_option("ode", chk_ode, "ODE JSON")->required();
    holo_check->add_option("series", chk_series, "series JSON or polynomial")->required();
    holo_check->add_option("--order", chk_T, "truncation for polynomial input")
        ->capture_default_str();
    holo_check->callback([&] {
        bool ok = ode_series_check(ode_from_json(load_arg(chk_ode)),
                                   load_series_or_poly(chk_series, chk_T));
        emit(njson{{"ok", ok}});
        if (!ok) {
            std::cerr << "series does not satisfy the ODE\n";
            exit_code = kExitFalse;
        }
    });

    std::string un_rec, un_init, un_supplied;
    std::uint64_t un_N = 0;
    auto* holo_unroll = holo->add_subcommand("unroll", "forward-solve a recurrence");
    holo_unroll->add_option("rec", un_rec, "recurrence JSON")->required();
    holo_unroll->add_option("init", un_init, "initial coefficients (JSON array)")->required();
    holo_unroll->add_option("N", un_N, "last index to compute")->required();
    holo_unroll->add_option("--supplied", un_supplied,
                            "values for undetermined indices (JSON object)");
    holo_unroll->callback([&] {
        std::vector<GaussRat> a =
            recurrence_unroll(recurrence_from_json(load_arg(un_rec)), load_initial(un_init),
                              un_N, load_supplied(un_supplied));
        emit(series_to_json(TruncSeries(std::move(a))));
    });

    // ------------------------------------------------------------------ lac
    auto* lac = app.add_subcommand("lac", "support and gap analysis");
    lac->require_subcommand(1);

    std::string cnt_support;
    std::uint64_t cnt_x = 0;
    auto* lac_count = lac->add_subcommand("count", "N_f(x)");
    lac_count->add_option("support", cnt_support, "support JSON")->required();
    lac_count->add_option("x", cnt_x, "evaluation point")->required();
    lac_count->callback([&] {
        SupportProfile p = support_from_json(load_arg(cnt_support));
        emit(njson{{"x", cnt_x}, {"N", gap_count(p, cnt_x)}});
    });

    std::string cmb_p, cmb_q, cmb_op;
    auto* lac_combine = lac->add_subcommand("combine", "support of a sum or product");
    lac_combine->add_option("p", cmb_p, "support JSON")->required();
    lac_combine->add_option("q", cmb_q, "support JSON")->required();
    lac_combine->add_option("op", cmb_op, "add or mul")
        ->required()
        ->check(CLI::IsMember({"add", "mul"}));
    lac_combine->callback([&] {
        SupportCombineResult r =
            support_combine(support_from_json(load_arg(cmb_p)),
                            support_from_json(load_arg(cmb_q)),
                            cmb_op == "add" ? SupportOp::add : SupportOp::mul);
        emit(combine_result_to_json(r));
        if (!r.bound_holds) exit_code = kExitFalse;
    });

    std::string ev_support, ev_eps = "1/2";
    std::vector<std::uint64_t> ev_grid{10, 100, 1000};
    auto* lac_evidence = lac->add_subcommand("evidence", "gap-count growth report");
    lac_evidence->add_option("support", ev_support, "support JSON")->required();
    lac_evidence->add_option("--eps", ev_eps, "exponent eps")->capture_default_str();
    lac_evidence->add_option("--grid", ev_grid, "evaluation points")->capture_default_str();
    lac_evidence->callback([&] {
        emit(evidence_to_json(
            lacunarity_evidence(support_from_json(load_arg(ev_support)), parse_rat(ev_eps),
                                ev_grid)));
    });

    std::string cert_rec, cert_init, cert_supplied;
    std::uint64_t cert_H = kDefaultCertificateHorizon;
    auto* lac_certify = lac->add_subcommand("certify", "polynomiality certificate");
    lac_certify->add_option("rec", cert_rec, "recurrence JSON")->required();
    lac_certify->add_option("init", cert_init, "initial coefficients (JSON array)")->required();
    lac_certify->add_option("--horizon", cert_H, "unroll horizon H")->capture_default_str();
    lac_certify->add_option("--supplied", cert_supplied,
                            "values for undetermined indices (JSON object)");
    lac_certify->callback([&] {
        emit(certificate_to_json(
            polynomiality_certificate(recurrence_from_json(load_arg(cert_rec)),
                                      load_initial(cert_init), cert_H,
                                      load_supplied(cert_supplied))));
    });

    // ---------------------------------------------------------------- denef
    auto* denef = app.add_subcommand("denef", "definability witnesses");
    denef->require_subcommand(1);

    std::int64_t den_t = 0;
    auto* denef_wit = denef->add_subcommand("witness", "construct the witness for t");
    denef_wit->add_option("t", den_t, "integer t")->required();
    denef_wit->callback([&] {
        DenefWitness w = denef_witness(den_t);
        njson out = denef_witness_to_json(w);
        out["transcript"] = witness_transcript(w);
        emit(out);
    });

    std::string den_file;
    auto* denef_verify = denef->add_subcommand("verify", "re-check a witness");
    denef_verify->add_option("witness", den_file, "witness JSON")->required();
    denef_verify->callback([&] {
        WitnessVerdict v = witness_verify(denef_witness_from_json(load_arg(den_file)));
        emit(njson{{"ok", v.ok}, {"reasons", v.reasons}});
        if (!v.ok) {
            for (const auto& r : v.reasons) std::cerr << r << "\n";
            exit_code = kExitFalse;
        }
    });

    // --------------------------------------------------------------- series
    auto* series = app.add_subcommand("series", "truncated power series");
    series->require_subcommand(1);
    std::size_t ser_T = 120;

    std::string exp_arg;
    auto* series_exp = series->add_subcommand("exp", "exponential of a series");
    series_exp->add_option("s", exp_arg, "series JSON or polynomial")->required();
    series_exp->add_option("--order", ser_T, "truncation order T")->capture_default_str();
    series_exp->callback(
        [&] { emit(series_to_json(ts_exp(load_series_or_poly(exp_arg, ser_T)))); });

    auto* series_w = series->add_subcommand("w", "the branch W of sqrt(z^2-1) with W(0)=i");
    series_w->add_option("--order", ser_T, "truncation order T")->capture_default_str();
    series_w->callback([&] { emit(series_to_json(series_W(ser_T))); });

    std::string mul_a, mul_b;
    auto* series_mul = series->add_subcommand("mul", "product of two series");
    series_mul->add_option("s", mul_a, "series JSON or polynomial")->required();
    series_mul->add_option("t", mul_b, "series JSON or polynomial")->required();
    series_mul->add_option("--order", ser_T, "truncation order T")->capture_default_str();
    series_mul->callback([&] {
        emit(series_to_json(
            ts_mul(load_series_or_poly(mul_a, ser_T), load_series_or_poly(mul_b, ser_T))));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const njson::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return exit_code;
}
