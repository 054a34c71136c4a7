#include <doctest.h>

#include "leavitt/json_io.hpp"
#include "leavitt/parser.hpp"
#include "leavitt/random_gen.hpp"

using namespace leavitt;

namespace {
const Field q = Field::rationals();
}

TEST_CASE("expression parsing hits the documented forms") {
    AlgebraElement a = parse_leavitt("3*c^2 d - 1/2*d*", q);
    CHECK(a.coeff(BasisWord::c_d(2)) == Scalar::of_int(q, 3));
    CHECK(a.coeff(BasisWord::dstar()) == Scalar::parse(q, "-1/2"));
    CHECK(a.str() == "3*c^2 d - 1/2*d*");

    AlgebraElement b = parse_leavitt("c*^2 + 2*w", q);
    CHECK(b.coeff(BasisWord::cstar_pow(2)) == Scalar::one(q));
    CHECK(b.coeff(BasisWord::w()) == Scalar::of_int(q, 2));

    // The star is a ghost marker right after c or d and a product sign
    // everywhere else; juxtaposition multiplies too.
    CHECK(parse_leavitt("c* c", q) == parse_leavitt("v", q));
    CHECK(parse_leavitt("2*v", q) == parse_leavitt("v", q).scaled(Scalar::of_int(q, 2)));
    CHECK(parse_leavitt("(v + w)*(v + w)", q) == AlgebraElement::one(q));

    // A zero exponent means the ring identity, not the vertex.
    CHECK(parse_leavitt("c^0", q) == AlgebraElement::one(q));
    CHECK(parse_jacobson("X^0", q) == JacobsonElement::one(q));
    CHECK(parse_jacobson("Y^3 X^2", q) == JacobsonElement::mono(q, {3, 2}));
}

TEST_CASE("parse errors carry 1-based positions") {
    try {
        parse_leavitt("c^^2", q);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position == 3);
    }
    CHECK_THROWS_AS(parse_leavitt("", q), parse_error);
    CHECK_THROWS_AS(parse_leavitt("c +", q), parse_error);
    CHECK_THROWS_AS(parse_leavitt("q", q), parse_error);
    CHECK_THROWS_AS(parse_poly("1/0", q), parse_error);
}

TEST_CASE("exponents are bounded") {
    CHECK(parse_poly("x^10000", q).degree() == 10000);
    CHECK_THROWS_AS(parse_poly("x^10001", q), parse_error);
    CHECK_THROWS_AS(parse_poly("x^100000", q), parse_error);
    CHECK_THROWS_AS(parse_leavitt("c^10001", q), parse_error);
}

TEST_CASE("negative exponents only in the laurent reader") {
    CHECK(parse_laurent("c^-1 + 1", q) ==
          LaurentPoly::mono(q, -1, Scalar::one(q)) + LaurentPoly::one(q));
    CHECK(parse_laurent("c^-2", q).min_exp() == -2);
    CHECK_THROWS_AS(parse_leavitt("c^-1", q), parse_error);
    CHECK_THROWS_AS(parse_poly("x^-1", q), parse_error);
    CHECK_THROWS_AS(parse_laurent("(c + 1)^-1", q), parse_error);
}

TEST_CASE("algebra and jacobson JSON roundtrips") {
    AlgebraElement a = parse_leavitt("3*c^2 d - 1/2*d* + w", q);
    CHECK(algebra_from_json(algebra_to_json(a), q) == a);
    json ja = algebra_to_json(a);
    CHECK(ja["terms"][0]["word"] == "w");
    CHECK(ja["terms"][1]["coeff"] == "3");

    JacobsonElement e = parse_jacobson("Y^2 - 2*Y^3 X", q);
    CHECK(jacobson_from_json(jacobson_to_json(e), q) == e);
    CHECK(jacobson_to_json(JacobsonElement::one(q))["terms"][0]["word"] == "1");

    RandomGen rng(71);
    for (int t = 0; t < 100; ++t) {
        AlgebraElement x = rng.algebra_element(q, 4, 5);
        CHECK(algebra_from_json(algebra_to_json(x), q) == x);
        JacobsonElement y = rng.jacobson_element(q, 4, 5);
        CHECK(jacobson_from_json(jacobson_to_json(y), q) == y);
    }
}

TEST_CASE("module element JSON carries truncation metadata") {
    EnvRwElement m(q, 4, false);
    m.set_k_minus1(Scalar::parse(q, "-1/2"));
    m.set_tail_coeff(2, Scalar::of_int(q, 3));
    json jm = ew_to_json(m);
    CHECK(jm["k-1"] == "-1/2");
    CHECK(jm["k"] == json::array({"0", "0", "3", "0", "0"}));
    CHECK(jm["order"] == 4);
    CHECK(jm["exact"] == false);
    EnvRwElement back = ew_from_json(jm, q);
    CHECK(agree(back, m));
    CHECK(back.order() == 4);
    CHECK_FALSE(back.exact());

    // Exact elements only list the stored support.
    EnvRwElement ex(q, -1, true);
    ex.set_tail_coeff(1, Scalar::one(q));
    CHECK(ew_to_json(ex)["k"] == json::array({"0", "1"}));
}

TEST_CASE("theta JSON uses polynomial strings and a nullable bound") {
    Poly x = Poly::x(q);
    EnvRcstarElement t(q, 3, false, 2);
    t.set_q_minus1(Poly::one(q) + x);
    t.set_q(1, x * x);
    json jt = theta_to_json(t);
    CHECK(jt["q-1"] == "1 + x");
    CHECK(jt["q"] == json::array({"0", "x^2", "0", "0"}));
    CHECK(jt["bound"] == 2);
    EnvRcstarElement back = theta_from_json(jt, q);
    CHECK(agree(back, t));
    CHECK(back.bound() == std::optional<long>(2));

    EnvRcstarElement unbounded(q, 3, false);
    CHECK(theta_to_json(unbounded)["bound"].is_null());
    CHECK_FALSE(theta_from_json(theta_to_json(unbounded), q).bound().has_value());

    // The documented input shape, with defaults for everything optional.
    json literal = json::parse(R"({"q-1":"1+x","q":["0","1"],"order":16})");
    EnvRcstarElement lit = theta_from_json(literal, q);
    CHECK(lit.order() == 16);
    CHECK_FALSE(lit.exact());
    CHECK_FALSE(lit.bound().has_value());
    CHECK(lit.q_minus1() == Poly::one(q) + x);
    CHECK(lit.q(0).is_zero());
    CHECK(lit.q(1) == Poly::one(q));
}

TEST_CASE("prufer and rational JSON roundtrips") {
    Poly f = Poly::one(q) + Poly::x(q);
    PruferElement u = PruferElement::make(f, 2, Poly::x(q));
    json ju = prufer_to_json(u);
    CHECK(ju["f"] == "1 + x");
    CHECK(ju["level"] == 2);
    CHECK(ju["ack-unverified"] == false);
    CHECK(prufer_from_json(ju, q) == u);

    RationalFunc g = RationalFunc::of(Poly::x(q), f);
    json jg = rational_to_json(g);
    CHECK(jg["num"] == "x");
    CHECK(jg["den"] == "1 + x");
    CHECK(rational_from_json(jg, q) == g);
}

TEST_CASE("malformed JSON inputs are rejected") {
    CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"words":[]})"), q), error);
    CHECK_THROWS_AS(theta_from_json(json::parse(R"({"q-1":"1","q":[],"order":"big"})"), q),
                    error);
    CHECK_THROWS_AS(theta_from_json(json::parse(R"({"q-1":5,"q":[],"order":3})"), q), error);
    CHECK_THROWS_AS(ew_from_json(json::parse(R"({"k-1":"1","k":[1],"order":3})"), q), error);
}
