#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "leavitt/bridge.hpp"
#include "leavitt/catalog.hpp"
#include "leavitt/env_rcstar.hpp"
#include "leavitt/env_rw.hpp"
#include "leavitt/error.hpp"
#include "leavitt/json_io.hpp"
#include "leavitt/laurent.hpp"
#include "leavitt/parser.hpp"
#include "leavitt/prufer.hpp"
#include "leavitt/rational_func.hpp"
#include "leavitt/socle.hpp"
#include "leavitt/suites.hpp"

namespace {

using leavitt::json;

struct Global {
    std::string field_text = "q";
    long order = 16;
    std::uint64_t seed = 0;
    int trials = 200;
    bool json_out = false;

    leavitt::Field field() const { return leavitt::Field::parse(field_text); }
};

void emit(const Global& g, const json& j, const std::string& human) {
    if (g.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human << "\n";
}

json laurent_poly_to_json(const leavitt::LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, k] : p.terms())
        terms.push_back(json{{"exp", e}, {"coeff", k.str()}});
    return json{{"terms", std::move(terms)}};
}

int run_verify(const Global& g, const std::vector<std::string>& targets) {
    leavitt::SuiteConfig config;
    config.field = g.field();
    config.order = g.order;
    config.seed = g.seed;
    config.trials = g.trials;

    std::vector<std::string> names;
    for (const auto& t : targets) {
        if (t == "all") {
            names = leavitt::suite_names();
            break;
        }
        names.push_back(t);
    }
    if (names.empty()) names = leavitt::suite_names();

    std::vector<leavitt::SuiteReport> reports;
    for (const auto& n : names) reports.push_back(leavitt::run_suite(n, config));

    int failed = 0;
    json out;
    out["config"] = json{{"field", config.field.str()},
                         {"order", config.order},
                         {"seed", config.seed},
                         {"trials", config.trials}};
    out["suites"] = json::array();
    for (const auto& rep : reports) {
        if (!rep.passed()) ++failed;
        std::cerr << "# " << rep.suite << ": " << rep.wall_ms << " ms\n";
        json failures = json::array();
        for (const auto& fa : rep.failures)
            failures.push_back(json{{"counterexample", fa.literal}, {"message", fa.message}});
        out["suites"].push_back(json{{"suite", rep.suite},
                                     {"statement", rep.statement},
                                     {"trials", rep.trials},
                                     {"failures", std::move(failures)},
                                     {"passed", rep.passed()}});
        if (!g.json_out) {
            std::cout << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << " ("
                      << rep.trials << " trials";
            if (!rep.passed()) std::cout << ", " << rep.failures.size() << " failures shown";
            std::cout << ")\n";
            for (const auto& fa : rep.failures) {
                std::cout << "  counterexample: " << fa.literal << "\n";
                std::cout << "    " << fa.message << "\n";
            }
        }
    }
    out["passed"] = failed == 0;
    if (g.json_out)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << (failed == 0 ? "all suites passed"
                                  : std::to_string(failed) + " suite(s) failed")
                  << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic models of a path algebra presentation of K<X,Y | XY = 1> "
                 "and of its indecomposable injective modules"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--field", g.field_text, "Coefficient field: q or gf:<p>")
        ->default_val("q");
    app.add_option("--order", g.order, "Default truncation order")->default_val(16);
    app.add_option("--seed", g.seed, "Seed for randomized suites")->default_val(0);
    app.add_option("--trials", g.trials, "Trials per randomized suite")->default_val(200);
    app.add_flag("--json", g.json_out, "Emit JSON instead of plain text");

    int rc = 0;

    // nf
    std::string nf_expr;
    auto* nf = app.add_subcommand("nf", "Normal form of an expression in v w c c* d d*");
    nf->add_option("expr", nf_expr, "Expression")->required();
    nf->callback([&] {
        auto a = leavitt::parse_leavitt(nf_expr, g.field());
        emit(g, leavitt::algebra_to_json(a), a.str());
    });

    // mul
    std::string mul_a, mul_b;
    auto* mul = app.add_subcommand("mul", "Normal form of a product of two expressions");
    mul->add_option("left", mul_a, "Left factor")->required();
    mul->add_option("right", mul_b, "Right factor")->required();
    mul->callback([&] {
        auto f = g.field();
        auto a = leavitt::parse_leavitt(mul_a, f) * leavitt::parse_leavitt(mul_b, f);
        emit(g, leavitt::algebra_to_json(a), a.str());
    });

    // convert
    std::string conv_expr, conv_from, conv_to;
    auto* conv = app.add_subcommand("convert", "Move an element across the generator "
                                               "correspondence X <-> c* + d*, Y <-> c + d");
    conv->add_option("expr", conv_expr, "Expression")->required();
    conv->add_option("--from", conv_from, "Source presentation: leavitt or jacobson")
        ->required()
        ->check(CLI::IsMember({"leavitt", "jacobson"}));
    conv->add_option("--to", conv_to, "Target presentation: leavitt or jacobson")
        ->required()
        ->check(CLI::IsMember({"leavitt", "jacobson"}));
    conv->callback([&] {
        auto f = g.field();
        if (conv_from == "leavitt") {
            auto a = leavitt::parse_leavitt(conv_expr, f);
            if (conv_to == "leavitt")
                emit(g, leavitt::algebra_to_json(a), a.str());
            else {
                auto j = leavitt::to_jacobson(a);
                emit(g, leavitt::jacobson_to_json(j), j.str());
            }
        } else {
            auto j = leavitt::parse_jacobson(conv_expr, f);
            if (conv_to == "jacobson")
                emit(g, leavitt::jacobson_to_json(j), j.str());
            else {
                auto a = leavitt::to_leavitt(j);
                emit(g, leavitt::algebra_to_json(a), a.str());
            }
        }
    });

    // quotient
    std::string quot_expr;
    auto* quot = app.add_subcommand("quotient", "Image in the Laurent quotient modulo the socle");
    quot->add_option("expr", quot_expr, "Expression")->required();
    quot->callback([&] {
        auto p = leavitt::quotient_map(leavitt::parse_leavitt(quot_expr, g.field()));
        emit(g, laurent_poly_to_json(p), p.str("c"));
    });

    // act
    std::string act_expr, act_module, act_elem;
    auto* act = app.add_subcommand("act", "Apply a ring element to a module element");
    act->add_option("expr", act_expr, "Ring expression")->required();
    act->add_option("--on", act_module, "Module: env-w, env-cstar, rational, or prufer")
        ->required()
        ->check(CLI::IsMember({"env-w", "env-cstar", "rational", "prufer"}));
    act->add_option("element", act_elem, "Module element as a JSON literal")->required();
    act->callback([&] {
        auto f = g.field();
        auto r = leavitt::parse_leavitt(act_expr, f);
        json j = json::parse(act_elem);
        if (act_module == "env-w") {
            auto m = leavitt::ew_from_json(j, f).act(r);
            emit(g, leavitt::ew_to_json(m), m.str());
        } else if (act_module == "env-cstar") {
            auto t = leavitt::theta_from_json(j, f).act(r);
            emit(g, leavitt::theta_to_json(t), t.str());
        } else if (act_module == "rational") {
            auto q = leavitt::rational_act(r, leavitt::rational_from_json(j, f));
            emit(g, leavitt::rational_to_json(q), q.str("c"));
        } else {
            auto u = leavitt::prufer_from_json(j, f).act(r);
            emit(g, leavitt::prufer_to_json(u), u.str());
        }
    });

    // baer
    std::string baer_p, baer_image;
    auto* baer = app.add_subcommand(
        "baer", "Solve p(c) beta = image in the series envelope, to the global order");
    baer->add_option("--p", baer_p, "Polynomial with constant term 1, e.g. \"1+x\"")->required();
    baer->add_option("--image", baer_image, "Series envelope element as a JSON literal")
        ->required();
    baer->callback([&] {
        auto f = g.field();
        auto p = leavitt::parse_poly(baer_p, f);
        auto image = leavitt::theta_from_json(json::parse(baer_image), f);
        auto beta = leavitt::baer_extend(p, image, g.order);
        emit(g, leavitt::theta_to_json(beta), beta.str());
    });

    // socle decompose
    std::string socle_expr;
    auto* socle = app.add_subcommand("socle", "Socle operations");
    socle->require_subcommand(1);
    auto* dec = socle->add_subcommand("decompose",
                                      "Split a socle element along the w-generated summands");
    dec->add_option("expr", socle_expr, "Expression")->required();
    dec->callback([&] {
        auto x = leavitt::parse_leavitt(socle_expr, g.field());
        auto sv = leavitt::socle_decompose(x);
        auto wpart = leavitt::ew_project(sv.w_part());
        json summands = json::array();
        std::string human = "w summand: " + wpart.str();
        for (std::size_t i = 0; i < sv.components().size(); ++i) {
            auto s = sv.actual(i);
            summands.push_back(leavitt::algebra_to_json(s));
            human += "\nsummand " + std::to_string(i) + ": " + s.str();
        }
        human += "\nreassembled: " + sv.reassemble().str();
        emit(g,
             json{{"w-part", leavitt::algebra_to_json(wpart)},
                  {"summands", std::move(summands)},
                  {"reassembled", leavitt::algebra_to_json(sv.reassemble())}},
             human);
    });

    // reduce
    std::string reduce_elem;
    std::optional<long> reduce_bound;
    auto* red = app.add_subcommand(
        "reduce", "Anti-diagonal reduction of a degree-bounded series envelope element");
    red->add_option("element", reduce_elem, "Series envelope element as a JSON literal")
        ->required();
    red->add_option("--bound", reduce_bound, "Declared degree bound");
    red->callback([&] {
        auto f = g.field();
        auto t = leavitt::theta_from_json(json::parse(reduce_elem), f);
        if (reduce_bound) t = t.with_bound(*reduce_bound);
        auto s = leavitt::reduce(t);
        emit(g, leavitt::laurent_series_to_json(s), s.str("c"));
    });

    // catalog
    auto* cat = app.add_subcommand("catalog", "List the indecomposable injective families");
    cat->callback([&] {
        json arr = json::array();
        std::string human;
        for (const auto& d : leavitt::module_catalog()) {
            arr.push_back(json{{"key", d.key},
                               {"module", d.left_side},
                               {"two-generator-name", d.right_side},
                               {"parameters", d.parameters}});
            if (!human.empty()) human += "\n";
            human += d.key + "\n  " + d.left_side + "\n  as K<X,Y | XY = 1>-module: " +
                     d.right_side + "\n  " + d.parameters;
        }
        emit(g, arr, human);
    });

    // verify
    std::vector<std::string> verify_targets;
    auto* ver = app.add_subcommand("verify", "Run property suites");
    ver->add_option("suites", verify_targets,
                    "Suite names, or 'all' (default); 'iso' is shorthand for iso-roundtrip");
    ver->callback([&] { rc = run_verify(g, verify_targets); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const leavitt::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
