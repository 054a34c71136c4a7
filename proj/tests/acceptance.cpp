// Acceptance harness: twelve go/no-go checks over the whole library, one
// printed line each. Everything is exact arithmetic; the only tolerances
// are the wall-clock budgets stated inline.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "leavitt/bridge.hpp"
#include "leavitt/env_rcstar.hpp"
#include "leavitt/env_rw.hpp"
#include "leavitt/json_io.hpp"
#include "leavitt/laurent.hpp"
#include "leavitt/laurent_series.hpp"
#include "leavitt/parser.hpp"
#include "leavitt/prufer.hpp"
#include "leavitt/random_gen.hpp"
#include "leavitt/rewrite.hpp"
#include "leavitt/socle.hpp"
#include "leavitt/suites.hpp"

using namespace leavitt;
using Clock = std::chrono::steady_clock;

namespace {

int failed = 0;

void report(bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " - " << what << "\n";
    if (!ok) ++failed;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const Field q = Field::rationals();

AlgebraElement G(Gen g) { return AlgebraElement::generator(q, g); }
AlgebraElement W(const BasisWord& w) { return AlgebraElement::word(q, w); }

// All basis words with exponents up to max_exp, every shape included.
std::vector<BasisWord> words_up_to(std::uint32_t max_exp) {
    std::vector<BasisWord> out{BasisWord::v(), BasisWord::w(), BasisWord::d(),
                               BasisWord::dstar()};
    for (std::uint32_t i = 1; i <= max_exp; ++i) {
        out.push_back(BasisWord::c_pow(i));
        out.push_back(BasisWord::cstar_pow(i));
        out.push_back(BasisWord::c_d(i));
        out.push_back(BasisWord::dstar_cstar(i));
        for (std::uint32_t j = 1; j <= max_exp; ++j) out.push_back(BasisWord::c_cstar(i, j));
    }
    return out;
}

AlgebraElement poly_in_c(const Poly& p) {
    AlgebraElement a = AlgebraElement::zero(p.field());
    for (long k = 0; k <= p.degree(); ++k) {
        Scalar ck = p.coeff(std::size_t(k));
        if (ck.is_zero()) continue;
        if (k == 0)
            a = a + AlgebraElement::one(p.field()).scaled(ck);
        else
            a = a + AlgebraElement::word(p.field(), BasisWord::c_pow(std::uint32_t(k)), ck);
    }
    return a;
}

void criterion_relations() {
    auto start = Clock::now();
    bool ok = true;
    const AlgebraElement v = G(Gen::V), w = G(Gen::W), c = G(Gen::C), cs = G(Gen::Cstar),
                         d = G(Gen::D), ds = G(Gen::Dstar);
    const AlgebraElement zero = AlgebraElement::zero(q);
    ok = ok && v * w == zero && w * v == zero;
    ok = ok && v * v == v && w * w == w;
    ok = ok && v * c == c && c * v == c;
    ok = ok && v * cs == cs && cs * v == cs;
    ok = ok && v * d == d && d * w == d;
    ok = ok && w * ds == ds && ds * v == ds;
    ok = ok && cs * c == v && ds * d == w;
    ok = ok && cs * d == zero && ds * c == zero;
    ok = ok && c * cs == v - d * ds;
    ok = ok && v + w == AlgebraElement::one(q);
    double t = ms_since(start);
    std::ostringstream line;
    line << "defining relations: all eleven hold exactly under the structured product ("
         << t << " ms, budget 1000 ms)";
    report(ok && t < 1000.0, line.str());
}

void criterion_oracle() {
    auto start = Clock::now();
    const std::vector<BasisWord> words = words_up_to(6);
    long pairs = 0;
    bool ok = true;
    for (const BasisWord& a : words) {
        for (const BasisWord& b : words) {
            ++pairs;
            FreeWord concat = a.letters();
            FreeWord tailb = b.letters();
            concat.insert(concat.end(), tailb.begin(), tailb.end());
            if (!(word_mul(a, b, q) == rewrite_oracle(concat, q))) ok = false;
        }
    }
    double t = ms_since(start);
    std::ostringstream line;
    line << "oracle equivalence: structured product matches the rewriting oracle on all "
         << pairs << " basis-word pairs with exponents <= 6 (" << t
         << " ms, budget 10000 ms)";
    report(ok && t < 10000.0 && pairs == 4096, line.str());
}

void criterion_iso() {
    bool ok = true;
    RandomGen rng(101);
    for (int t = 0; t < 300; ++t) {
        AlgebraElement a = rng.algebra_element(q, 4, 6);
        if (!(to_leavitt(to_jacobson(a)) == a)) ok = false;
        JacobsonElement e = rng.jacobson_element(q, 4, 6);
        if (!(to_jacobson(to_leavitt(e)) == e)) ok = false;
    }
    ok = ok && to_leavitt(parse_jacobson("X*Y", q)) == AlgebraElement::one(q);
    ok = ok && JacobsonElement::x(q) * JacobsonElement::y(q) == JacobsonElement::one(q);
    report(ok,
           "isomorphism: both maps invert each other on 300 random elements per direction "
           "(exponents <= 6), and XY = 1 on both sides, exact");
}

void criterion_pmaps() {
    bool ok = true;
    for (Field f : {Field::rationals(), Field::gf(5)}) {
        RandomGen rng(103);
        for (int t = 0; t < 200; ++t) {
            EnvRcstarElement m = rng.theta(f, 16, 4, true);
            auto P = [&](const EnvRcstarElement& e, Gen g) { return e.act_gen(g); };
            ok = ok && agree(P(P(m, Gen::C), Gen::Cstar), P(m, Gen::V));
            ok = ok && agree(P(P(m, Gen::D), Gen::Dstar), P(m, Gen::W));
            ok = ok && P(P(m, Gen::D), Gen::Cstar).is_zero_within_order();
            ok = ok && P(P(m, Gen::C), Gen::Dstar).is_zero_within_order();
            ok = ok && agree(P(P(m, Gen::Cstar), Gen::C) + P(P(m, Gen::Dstar), Gen::D),
                             P(m, Gen::V));
            ok = ok && agree(P(m, Gen::V) + P(m, Gen::W), m);
            // Vertex absorptions, as operators.
            ok = ok && agree(P(P(m, Gen::C), Gen::V), P(m, Gen::C));
            ok = ok && agree(P(P(m, Gen::V), Gen::C), P(m, Gen::C));
            ok = ok && agree(P(P(m, Gen::Cstar), Gen::V), P(m, Gen::Cstar));
            ok = ok && agree(P(P(m, Gen::D), Gen::V), P(m, Gen::D));
            ok = ok && agree(P(P(m, Gen::W), Gen::D), P(m, Gen::D));
            ok = ok && agree(P(P(m, Gen::Dstar), Gen::W), P(m, Gen::Dstar));
            ok = ok && agree(P(P(m, Gen::V), Gen::Dstar), P(m, Gen::Dstar));
            if (!ok) break;
        }
        if (!ok) break;
    }
    report(ok,
           "component maps: operator identities and vertex absorptions hold on 200 random "
           "series elements at order 16, over the rationals and GF(5), exact");
}

void criterion_baer() {
    bool ok = true;
    Poly x = Poly::x(q);
    Poly p = Poly::one(q) + x;

    // The alternating pattern: an all-ones image pulls back to the
    // even-indexed components.
    EnvRcstarElement image(q, 21, false);
    image.set_q_minus1(Poly::one(q));
    for (long i = 0; i <= 21; ++i) image.set_q(i, Poly::one(q));
    EnvRcstarElement beta = baer_extend(p, image, 20);
    for (long i = 0; i <= 20 && ok; ++i)
        ok = beta.q(i) == (i % 2 == 0 ? Poly::one(q) : Poly::zero(q));
    ok = ok && beta.q_minus1() == Poly::one(q);
    ok = ok && agree_to_order(beta.act(poly_in_c(p)), image, 19);

    RandomGen rng(107);
    for (int t = 0; t < 100 && ok; ++t) {
        Poly pp = rng.unit_poly(q, 4);
        EnvRcstarElement img = rng.theta(q, 20 + pp.degree(), 5, false);
        EnvRcstarElement b = baer_extend(pp, img, 20);
        ok = agree_to_order(b.act(poly_in_c(pp)), img, 20 - pp.degree()) &&
             b.q_minus1() == img.q_minus1();
    }
    report(ok,
           "baer extension: p(c) * extend(p, image, 20) = image to order 20 - deg p on 100 "
           "random instances with deg p <= 4, alternating pattern included, exact");
}

void criterion_essential() {
    bool ok = true;
    RandomGen rng(109);
    int done = 0;
    while (done < 100 && ok) {
        EnvRwElement m = rng.ew_element(q, 10, true);
        if (m.is_zero_within_order()) continue;
        ++done;
        EwWitness wit = essential_witness(m);
        ok = !wit.image.k_minus1().is_zero() && wit.image.tail().empty() &&
             agree(m.act(wit.r), wit.image);
        // The multiplier follows the first-nonzero-slot case split.
        if (!m.k_minus1().is_zero()) {
            ok = ok && wit.r == parse_leavitt("w", q);
        } else {
            long first = m.tail().begin()->first;
            ok = ok && wit.r == W(BasisWord::dstar_cstar(std::uint32_t(first)));
        }
    }
    done = 0;
    while (done < 100 && ok) {
        EnvRcstarElement m = rng.theta(q, 10, 3, true);
        if (m.is_zero_within_order()) continue;
        ++done;
        ThetaWitness wit = essential_witness(m);
        ok = !wit.image.q_minus1().is_zero() && wit.image.series().empty() &&
             agree(m.act(wit.r), wit.image);
        if (!m.q_minus1().is_zero()) {
            ok = ok && wit.r == parse_leavitt("w", q);
        } else {
            long first = m.series().begin()->first;
            ok = ok && wit.r == W(BasisWord::dstar_cstar(std::uint32_t(first)));
        }
    }
    report(ok,
           "essentiality: verified multipliers for 100 random nonzero elements of each "
           "envelope model, multiplier shape matching the first nonzero slot");
}

void criterion_socle() {
    bool ok = G(Gen::W) * G(Gen::W) == G(Gen::W);
    for (std::uint32_t i = 0; i <= 8 && ok; ++i) {
        AlgebraElement e = socle_idempotent(q, i);
        ok = e * e == e;
    }
    RandomGen rng(113);
    for (int t = 0; t < 100 && ok; ++t) {
        AlgebraElement s = rng.socle_element(q, 5, 4);
        ok = is_in_socle(s) && socle_decompose(s).reassemble() == s;
        // Membership must agree with decomposability on nearby non-members.
        AlgebraElement y = s + W(BasisWord::c_pow(std::uint32_t(rng.uniform(0, 2))));
        ok = ok && is_in_socle(y) == try_socle_decompose(y).has_value() && !is_in_socle(y);
    }
    report(ok,
           "socle: projections idempotent, 100 random elements decompose and reassemble "
           "exactly, membership agrees with decomposability");
}

void criterion_identities() {
    bool ok = true;
    for (std::uint32_t h = 0; h <= 6 && ok; ++h) {
        for (std::uint32_t m = 0; m <= 6 && ok; ++m) {
            AlgebraElement lhs = W(BasisWord::cstar_pow(m)) * W(BasisWord::c_pow(h));
            AlgebraElement expect =
                h >= m ? W(BasisWord::c_pow(h - m)) : W(BasisWord::cstar_pow(m - h));
            ok = lhs == expect;
            // The two-sided expansion collapses back to the h = m diagonal.
            AlgebraElement both = W(BasisWord::c_cstar(h, m)) * W(BasisWord::c_cstar(m, h));
            ok = ok && both == W(BasisWord::c_cstar(h, h));
        }
    }
    for (std::uint32_t n = 0; n <= 8 && ok; ++n) {
        AlgebraElement sum = AlgebraElement::zero(q);
        for (std::uint32_t i = 0; i <= n; ++i) sum = sum + socle_idempotent(q, i);
        ok = sum == W(BasisWord::v()) - W(BasisWord::c_cstar(n + 1, n + 1));
    }
    report(ok,
           "power identities: both exponent cases verified for all h, m <= 6 under the "
           "structured product, telescoping idempotent sum for n <= 8, exact");
}

void criterion_reduction() {
    bool ok = true;
    RandomGen rng(127);
    for (int t = 0; t < 50 && ok; ++t)
        ok = reduce(rng.kernel_theta(q, 12, 3)).is_zero_within_order();
    for (int t = 0; t < 100 && ok; ++t) {
        EnvRcstarElement a = rng.theta(q, 12, 3, false);
        ok = agree(reduce(a.act_gen(Gen::C)),
                   reduce(a).times(LaurentPoly::mono(q, 1, Scalar::one(q))));
    }
    std::set<std::string> inputs;
    std::set<std::string> outputs;
    while (inputs.size() < 100 && ok) {
        LaurentSeriesElement s(q, 6, true);
        for (long e = -2; e <= 6; ++e)
            if (rng.coin()) s.set_coeff(e, rng.scalar(q));
        if (!inputs.insert(s.str()).second) continue;
        LaurentSeriesElement back = reduce(theta_from_reduction(s, 2));
        ok = agree(back, s);
        outputs.insert(back.str());
    }
    ok = ok && outputs.size() == 100;
    report(ok,
           "series reduction: 50 kernel elements annihilated, shift-equivariant on 100 "
           "random bounded elements, injective across 100 distinct representatives");
}

void criterion_prufer() {
    bool ok = true;
    struct Case {
        Field f;
        const char* mod;
    };
    for (const Case& cse : {Case{Field::gf(2), "1+x+x^2"}, Case{Field::rationals(), "1+x"}}) {
        Poly f = parse_poly(cse.mod, cse.f);
        RandomGen rng(131);
        for (int t = 0; t < 50 && ok; ++t) {
            PruferElement u = rng.prufer_element(f, 4);
            if (u.is_zero()) continue;
            PruferElement hit = u;
            for (long k = 0; k < u.level() && ok; ++k) {
                ok = !hit.is_zero();
                hit = hit.act_poly(f);
            }
            ok = ok && hit.is_zero();
            PruferElement up = u.divisibility_witness();
            ok = ok && up.act_poly(f) == u;
            ok = ok && u.act(parse_leavitt("w", cse.f)).is_zero();
            ok = ok && u.act(parse_leavitt("v - c c*", cse.f)).is_zero();
            AlgebraElement a = rng.algebra_element(cse.f, 3, 4);
            AlgebraElement b = rng.algebra_element(cse.f, 3, 4);
            ok = ok && u.act(a * b) == u.act(b).act(a);
        }
    }
    report(ok,
           "prufer chains: over GF(2) with 1+x+x^2 and the rationals with 1+x, the modulus "
           "power kills its level exactly, witnesses verify, the kernel ideal annihilates, "
           "and the action respects products");
}

void criterion_torsion() {
    bool ok = true;
    RandomGen rng(137);
    Poly probes[2] = {parse_poly("1+x", q), parse_poly("1+x+x^2", q)};
    int done = 0;
    while (done < 200 && ok) {
        EnvRcstarElement m = rng.theta(q, 16, 3, false);
        if (m.is_zero_within_order()) continue;
        ok = !torsion_probe(probes[done % 2], m);
        ++done;
    }
    report(ok,
           "torsion probes: 200 random nonzero bounded elements survive both 1+x and "
           "1+x+x^2, so no polynomial torsion appears");
}

void criterion_verify_all() {
    auto start = Clock::now();
    SuiteConfig cfg;
    auto reports = run_all_suites(cfg);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    double t = ms_since(start);
    std::ostringstream line;
    line << "end to end: the full default verification pass finishes clean (" << t
         << " ms, budget 60000 ms)";
    report(ok && t < 60000.0, line.str());
}

}  // namespace

int main() {
    criterion_relations();
    criterion_oracle();
    criterion_iso();
    criterion_pmaps();
    criterion_baer();
    criterion_essential();
    criterion_socle();
    criterion_identities();
    criterion_reduction();
    criterion_prufer();
    criterion_torsion();
    criterion_verify_all();
    if (failed == 0) {
        std::cout << "all 12 acceptance checks passed\n";
        return 0;
    }
    std::cout << failed << " acceptance check(s) failed\n";
    return 1;
}
