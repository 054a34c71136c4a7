#include <doctest.h>

#include "leavitt/env_rcstar.hpp"
#include "leavitt/env_rw.hpp"
#include "leavitt/laurent_series.hpp"
#include "leavitt/parser.hpp"
#include "leavitt/random_gen.hpp"
#include "leavitt/socle.hpp"

using namespace leavitt;

namespace {
const Field q = Field::rationals();

EnvRwElement ew_ones(long order, bool exact) {
    EnvRwElement m(q, order, exact);
    for (long i = 0; i <= order; ++i) m.set_tail_coeff(i, Scalar::one(q));
    return m;
}

EnvRcstarElement theta_ones(long order, bool exact) {
    EnvRcstarElement t(q, order, exact);
    for (long i = 0; i <= order; ++i) t.set_q(i, Poly::one(q));
    return t;
}

AlgebraElement poly_in_c(const Poly& p) {
    AlgebraElement a = AlgebraElement::zero(p.field());
    for (long k = 0; k <= p.degree(); ++k) {
        Scalar ck = p.coeff(k);
        if (ck.is_zero()) continue;
        if (k == 0)
            a = a + AlgebraElement::one(p.field()).scaled(ck);
        else
            a = a + AlgebraElement::word(p.field(), BasisWord::c_pow(std::uint32_t(k)), ck);
    }
    return a;
}
}  // namespace

TEST_CASE("w-envelope generator actions on pinned inputs") {
    EnvRwElement m = ew_ones(2, true);  // d + c d + c^2 d

    EnvRwElement md = m.act(parse_leavitt("d*", q));
    CHECK(md.exact());
    CHECK(md.k_minus1() == Scalar::one(q));
    CHECK(md.tail().empty());

    EnvRwElement m2 = m.act(parse_leavitt("d* c*^2", q));
    CHECK(m2.k_minus1() == Scalar::one(q));
    CHECK(m2.tail().empty());

    CHECK(agree(m.act(AlgebraElement::one(q)), m));
    // v kills the w slot and keeps the tail; w does the opposite.
    EnvRwElement mw(q, 3, false);
    mw.set_k_minus1(Scalar::of_int(q, 7));
    mw.set_tail_coeff(1, Scalar::one(q));
    EnvRwElement onto_w = mw.act_gen(Gen::W);
    CHECK(onto_w.exact());
    CHECK(onto_w.k_minus1() == Scalar::of_int(q, 7));
    CHECK(onto_w.tail().empty());
    EnvRwElement onto_v = mw.act_gen(Gen::V);
    CHECK(onto_v.k_minus1().is_zero());
    CHECK(onto_v.tail_coeff(1) == Scalar::one(q));

    // c shifts the tail up and learns one more coefficient; c* shifts down.
    EnvRwElement up = mw.act_gen(Gen::C);
    CHECK(up.order() == 4);
    CHECK(up.tail_coeff(2) == Scalar::one(q));
    CHECK(up.k_minus1().is_zero());
    EnvRwElement down = mw.act_gen(Gen::Cstar);
    CHECK(down.order() == 2);
    CHECK(down.tail_coeff(0) == Scalar::one(q));

    // d moves the w slot into tail index 0 and is exact.
    EnvRwElement dd = mw.act_gen(Gen::D);
    CHECK(dd.exact());
    CHECK(dd.tail_coeff(0) == Scalar::of_int(q, 7));
    CHECK(dd.k_minus1().is_zero());
}

TEST_CASE("w-envelope embedding matches ring multiplication") {
    AlgebraElement x = parse_leavitt("2*w + c d - c^3 d", q);
    CHECK(ew_project(ew_embed(x)) == x);
    RandomGen rng(29);
    for (int t = 0; t < 200; ++t) {
        AlgebraElement a = rng.algebra_element(q, 3, 4);
        AlgebraElement s = rng.socle_element(q, 4, 3);
        // Keep only the w and c^i d terms; that span is the embedded ideal.
        AlgebraElement in_w = AlgebraElement::zero(q);
        for (const auto& [word, coeff] : s.terms())
            if (word.shape() == Shape::W || word.shape() == Shape::D ||
                word.shape() == Shape::CD)
                in_w.add_term(word, coeff);
        CHECK(agree(ew_embed(a * in_w), ew_embed(in_w).act(a)));
    }
}

TEST_CASE("w-envelope essential witnesses") {
    EnvRwElement just_w(q, 5, true);
    just_w.set_k_minus1(Scalar::one(q));
    EwWitness ww = essential_witness(just_w);
    CHECK(ww.r == parse_leavitt("w", q));
    CHECK(ww.image.k_minus1() == Scalar::one(q));
    CHECK(ww.image.tail().empty());

    EnvRwElement m(q, 5, true);
    m.set_tail_coeff(1, Scalar::of_int(q, 5));
    EwWitness wm = essential_witness(m);
    CHECK(wm.r == parse_leavitt("d* c*", q));
    CHECK(wm.image.k_minus1() == Scalar::of_int(q, 5));
    CHECK(wm.image.tail().empty());
    CHECK(agree(m.act(wm.r), wm.image));

    CHECK_THROWS_AS(essential_witness(EnvRwElement::zero(q)), error);
    CHECK_THROWS_AS(essential_witness(EnvRwElement(q, 4, false)), inconclusive_error);
}

TEST_CASE("c*-envelope generator actions on pinned inputs") {
    Poly x = Poly::x(q);

    EnvRcstarElement t(q, 4, true);
    t.set_q(0, Poly::one(q));
    EnvRcstarElement ts = t.act_gen(Gen::Cstar);
    CHECK(ts.q(0) == x);
    CHECK(ts.exact());

    // Truncated elements trade one order of precision per c* and gain one
    // per c.
    EnvRcstarElement tr(q, 4, false);
    tr.set_q(0, Poly::one(q));
    CHECK(tr.act_gen(Gen::Cstar).order() == 3);
    CHECK(tr.act_gen(Gen::C).order() == 5);

    // c* folds the next component in: q_0 <- x q_0 + q_1.
    EnvRcstarElement t2(q, 4, true);
    t2.set_q(0, Poly::one(q));
    t2.set_q(1, Poly::one(q) + x);
    CHECK(t2.act_gen(Gen::Cstar).q(0) == Poly::one(q) + x + x);

    EnvRcstarElement tw(q, 4, false);
    tw.set_q_minus1(x);
    tw.set_q(2, Poly::one(q));
    EnvRcstarElement onto_w = tw.act_gen(Gen::W);
    CHECK(onto_w.exact());
    CHECK(onto_w.q_minus1() == x);
    CHECK(onto_w.series().empty());
    EnvRcstarElement onto_v = tw.act_gen(Gen::V);
    CHECK(onto_v.q_minus1().is_zero());
    CHECK(onto_v.q(2) == Poly::one(q));

    // d produces the two-component pattern q_0 = q_{-1}, q_1 = -x q_{-1}.
    EnvRcstarElement td = tw.act_gen(Gen::D);
    CHECK(td.exact());
    CHECK(td.q(0) == x);
    CHECK(td.q(1) == -(x * x));
    CHECK(td.q_minus1().is_zero());

    // d* pulls component 0 into the d* c* slot.
    EnvRcstarElement t3(q, 4, true);
    t3.set_q(0, x);
    EnvRcstarElement tds = t3.act_gen(Gen::Dstar);
    CHECK(tds.exact());
    CHECK(tds.q_minus1() == x);
    CHECK(tds.series().empty());

    // Composites: c* after c is the identity on the range of v.
    RandomGen rng(31);
    for (int i = 0; i < 50; ++i) {
        EnvRcstarElement r = rng.theta(q, 8, 4, false);
        CHECK(agree(r.act_gen(Gen::C).act_gen(Gen::Cstar), r.act_gen(Gen::V)));
    }
}

TEST_CASE("c*-envelope embedding matches ring multiplication") {
    AlgebraElement x = parse_leavitt("d* c* + c^2 c*^3 - 2*c*", q);
    CHECK(theta_project(theta_embed(x)) == x);
    RandomGen rng(37);
    for (int t = 0; t < 200; ++t) {
        AlgebraElement a = rng.algebra_element(q, 3, 4);
        // Random element of the ideal: span of d* c* (c*)^j and c^i (c*)^(j+1).
        AlgebraElement cx = AlgebraElement::zero(q);
        for (int k = 0; k < 3; ++k) {
            auto e = std::uint32_t(rng.uniform(0, 3));
            if (rng.coin())
                cx.add_term(BasisWord::dstar_cstar(std::uint32_t(rng.uniform(1, 4))),
                            rng.scalar(q));
            else
                cx.add_term(BasisWord::c_cstar(e, std::uint32_t(rng.uniform(1, 4))),
                            rng.scalar(q));
        }
        CHECK(agree(theta_embed(a * cx), theta_embed(cx).act(a)));
    }
}

TEST_CASE("c*-envelope essential witnesses") {
    Poly x = Poly::x(q);

    EnvRcstarElement t(q, 6, true);
    t.set_q_minus1(x);
    t.set_q(3, Poly::one(q));
    ThetaWitness wt = essential_witness(t);
    CHECK(wt.r == parse_leavitt("w", q));
    CHECK(wt.image.q_minus1() == x);
    CHECK(wt.image.series().empty());
    CHECK(agree(t.act(wt.r), wt.image));

    EnvRcstarElement t2(q, 6, true);
    t2.set_q(1, Poly::one(q) + x);
    ThetaWitness wt2 = essential_witness(t2);
    CHECK(wt2.r == parse_leavitt("d* c*", q));
    CHECK(wt2.image.q_minus1() == Poly::one(q) + x);
    CHECK(wt2.image.series().empty());
    CHECK(agree(t2.act(wt2.r), wt2.image));

    CHECK_THROWS_AS(essential_witness(EnvRcstarElement::zero(q)), error);
    CHECK_THROWS_AS(essential_witness(EnvRcstarElement(q, 4, false)), inconclusive_error);
}

TEST_CASE("baer extension solves p(c) * result = image") {
    Poly x = Poly::x(q);
    Poly p = Poly::one(q) + x;

    // The alternating pattern: an all-ones image pulls back to the even
    // indices, and the d* c* component passes through untouched.
    EnvRcstarElement image = theta_ones(21, false);
    image.set_q_minus1(Poly::one(q));
    EnvRcstarElement beta = baer_extend(p, image, 20);
    CHECK(beta.order() == 20);
    CHECK(beta.q_minus1() == Poly::one(q));
    for (long i = 0; i <= 20; ++i)
        CHECK(beta.q(i) == (i % 2 == 0 ? Poly::one(q) : Poly::zero(q)));
    CHECK(agree_to_order(beta.act(poly_in_c(p)), image, 19));

    // p = 1 is the identity problem.
    EnvRcstarElement same = baer_extend(Poly::one(q), image, 21);
    CHECK(agree(same, image));

    // Exact zero image extends to zero.
    CHECK(baer_extend(p, EnvRcstarElement::zero(q), 10).is_zero_within_order());

    // The image must carry order + deg p coefficients.
    CHECK_THROWS_AS(baer_extend(p, theta_ones(5, false), 10), precision_error);
    CHECK_THROWS_AS(baer_extend(x, image, 5), error);

    RandomGen rng(41);
    for (int t = 0; t < 100; ++t) {
        Poly pp = rng.unit_poly(q, 3);
        EnvRcstarElement img = rng.theta(q, 20 + pp.degree(), 6, false);
        EnvRcstarElement b = baer_extend(pp, img, 20);
        CHECK(agree_to_order(b.act(poly_in_c(pp)), img, 20 - pp.degree()));
        CHECK(b.q_minus1() == img.q_minus1());
    }
}

TEST_CASE("socle projections and decomposition on pinned elements") {
    CHECK(socle_idempotent(q, 0) == parse_leavitt("v - c c*", q));
    AlgebraElement eps2 = socle_idempotent(q, 2);
    CHECK(eps2 == parse_leavitt("c^2 c*^2 - c^3 c*^3", q));
    CHECK(eps2 * eps2 == eps2);

    SocleVector sd = socle_decompose(parse_leavitt("d", q));
    CHECK(ew_project(sd.w_part()) == parse_leavitt("d", q));
    for (std::size_t i = 0; i < sd.components().size(); ++i)
        CHECK(sd.actual(i).is_zero());
    CHECK(sd.reassemble() == parse_leavitt("d", q));

    SocleVector s0 = socle_decompose(parse_leavitt("v - c c*", q));
    CHECK(s0.w_part().is_zero());
    CHECK(s0.actual(0) == parse_leavitt("v - c c*", q));
    CHECK(s0.reassemble() == parse_leavitt("v - c c*", q));

    SocleVector s3 = socle_decompose(parse_leavitt("d* c*^3", q));
    CHECK(s3.w_part().is_zero());
    CHECK(s3.actual(3) == parse_leavitt("d* c*^3", q));
    for (std::size_t i = 0; i < 3; ++i) CHECK(s3.actual(i).is_zero());

    CHECK_FALSE(try_socle_decompose(parse_leavitt("v", q)).has_value());
    CHECK_THROWS_AS(socle_decompose(parse_leavitt("c^2", q)), error);

    RandomGen rng(43);
    for (int t = 0; t < 100; ++t) {
        AlgebraElement s = rng.socle_element(q, 5, 4);
        REQUIRE(is_in_socle(s));
        CHECK(socle_decompose(s).reassemble() == s);
    }
}

TEST_CASE("anti-diagonal reduction on pinned elements") {
    Poly x = Poly::x(q);

    EnvRcstarElement ones = theta_ones(6, false).with_bound(0);
    LaurentSeriesElement r = reduce(ones);
    CHECK(r.order() == 6);
    for (long s = 0; s <= 6; ++s) CHECK(r.coeff(s) == Scalar::one(q));
    CHECK(r.principal_length() == 0);

    EnvRcstarElement t(q, 9, false, 1);
    t.set_q(0, x);
    LaurentSeriesElement rt = reduce(t);
    CHECK(rt.order() == 8);
    CHECK(rt.coeff(-1) == Scalar::one(q));
    CHECK(rt.principal_length() == 1);

    // The kernel generators: the d* c* component and the paired
    // x^a at slot i with -x^(a+1) at slot i+1 reduce to zero.
    EnvRcstarElement k(q, 9, false, 3);
    k.set_q_minus1(Poly::one(q) + x);
    k.set_q(2, x * x);
    k.set_q(3, -(x * x * x));
    CHECK(reduce(k).is_zero_within_order());

    CHECK_THROWS_AS(reduce(theta_ones(6, false)), error);

    RandomGen rng(47);
    for (int t2 = 0; t2 < 100; ++t2) {
        EnvRcstarElement a = rng.theta(q, 12, 3, false);
        LaurentSeriesElement ra = reduce(a);
        // Compatibility with the c action on both sides.
        CHECK(agree(reduce(a.act_gen(Gen::C)),
                    ra.times(LaurentPoly::mono(q, 1, Scalar::one(q)))));
        // Kernel elements shift the reduction by nothing.
        CHECK(reduce(rng.kernel_theta(q, 12, 3)).is_zero_within_order());
    }
}

TEST_CASE("canonical preimages reduce back to the series") {
    RandomGen rng(53);
    for (int t = 0; t < 100; ++t) {
        EnvRcstarElement a = rng.theta(q, 10, 2, false).with_bound(2);
        LaurentSeriesElement ra = reduce(a);
        EnvRcstarElement back = theta_from_reduction(ra, 2);
        CHECK(agree(reduce(back), ra));
    }
    // Pinned shape: packing c^-2 + 3 + c puts the principal part and the
    // constant in component 0 and the positive exponents further out.
    LaurentSeriesElement s(q, 4, true);
    s.set_coeff(-2, Scalar::one(q));
    s.set_coeff(0, Scalar::of_int(q, 3));
    s.set_coeff(1, Scalar::one(q));
    EnvRcstarElement t = theta_from_reduction(s, 2);
    Poly x = Poly::x(q);
    CHECK(t.q(0) == x * x + Poly::constant(Scalar::of_int(q, 3)));
    CHECK(t.q(1) == Poly::one(q));
    CHECK(agree(reduce(t), s));
    // A principal part longer than the bound cannot be packed.
    CHECK_THROWS_AS(theta_from_reduction(s, 1), error);
}

TEST_CASE("torsion probes never fire on nonzero elements") {
    Poly x = Poly::x(q);
    Poly p = Poly::one(q) + x;

    CHECK(torsion_probe(p, EnvRcstarElement(q, 8, false)));
    EnvRcstarElement t(q, 8, false);
    t.set_q(0, Poly::one(q));
    CHECK_FALSE(torsion_probe(p, t));

    LaurentSeriesElement zero(q, 10, false);
    CHECK(torsion_probe(p, zero));
    // The alternating series is the natural candidate for (1 + c)-torsion
    // and still survives: the bottom coefficient has nothing to cancel it.
    LaurentSeriesElement alt(q, 10, false);
    for (long e = -2; e <= 10; ++e)
        alt.set_coeff(e, e % 2 == 0 ? Scalar::one(q) : -Scalar::one(q));
    CHECK_FALSE(torsion_probe(p, alt));

    CHECK_THROWS_AS(torsion_probe(x, t), error);
}

TEST_CASE("truncation bookkeeping raises precision errors") {
    EnvRwElement m(q, 3, false);
    m.set_tail_coeff(3, Scalar::one(q));
    CHECK_THROWS_AS(m.tail_coeff(4), precision_error);
    CHECK_THROWS_AS(m.set_tail_coeff(4, Scalar::one(q)), precision_error);

    LaurentSeriesElement s(q, 2, false);
    CHECK_THROWS_AS(s.set_coeff(3, Scalar::one(q)), precision_error);
    CHECK_THROWS_AS(s.coeff(3), precision_error);
    LaurentSeriesElement ex(q, 2, true);
    CHECK(ex.coeff(3).is_zero());

    // Agreement only inspects the overlap of the valid orders.
    EnvRwElement a(q, 2, false), b(q, 9, false);
    a.set_tail_coeff(1, Scalar::one(q));
    b.set_tail_coeff(1, Scalar::one(q));
    b.set_tail_coeff(7, Scalar::one(q));
    CHECK(agree(a, b));
    CHECK_THROWS_AS(agree_to_order(a, b, 7), precision_error);
}
