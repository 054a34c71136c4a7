#include <doctest.h>

#include "leavitt/laurent.hpp"
#include "leavitt/parser.hpp"
#include "leavitt/random_gen.hpp"
#include "leavitt/rational_func.hpp"

using namespace leavitt;

namespace {
const Field q = Field::rationals();
}

TEST_CASE("quotient map on pinned elements") {
    CHECK(quotient_map(parse_leavitt("c^2 c*^3", q)) ==
          LaurentPoly::mono(q, -1, Scalar::one(q)));
    // dd* rewrites to v - cc*, and both routes must land on zero.
    CHECK(quotient_map(parse_leavitt("v - c c*", q)).is_zero());
    CHECK(quotient_map(AlgebraElement::generator(q, Gen::D) *
                       AlgebraElement::generator(q, Gen::Dstar))
              .is_zero());
    CHECK(quotient_map(AlgebraElement::one(q)) == LaurentPoly::one(q));
    CHECK(quotient_map(parse_leavitt("w", q)).is_zero());
    CHECK(quotient_map(parse_leavitt("3*c^2 d - 1/2*d*", q)).is_zero());
    CHECK(quotient_map(parse_leavitt("v + 2*c^3", q)).str() == "1 + 2*c^3");
}

TEST_CASE("socle membership matches the kernel") {
    CHECK(is_in_socle(parse_leavitt("d* c*^5", q)));
    CHECK(is_in_socle(parse_leavitt("v - c c*", q)));
    CHECK(is_in_socle(parse_leavitt("w + c^4 d", q)));
    CHECK_FALSE(is_in_socle(parse_leavitt("v", q)));
    CHECK_FALSE(is_in_socle(parse_leavitt("c^2 c*^2", q)));
    CHECK(is_in_socle(AlgebraElement::zero(q)));
}

TEST_CASE("quotient map is a ring homomorphism") {
    for (Field f : {Field::rationals(), Field::gf(5)}) {
        RandomGen rng(17);
        for (int t = 0; t < 300; ++t) {
            AlgebraElement x = rng.algebra_element(f, 4, 5);
            AlgebraElement y = rng.algebra_element(f, 4, 5);
            CHECK(quotient_map(x * y) == quotient_map(x) * quotient_map(y));
            CHECK(quotient_map(x + y) == quotient_map(x) + quotient_map(y));
        }
    }
}

TEST_CASE("the quotient has no zero divisors") {
    for (Field f : {Field::rationals(), Field::gf(2)}) {
        RandomGen rng(19);
        int seen = 0;
        while (seen < 200) {
            LaurentPoly a = quotient_map(rng.algebra_element(f, 4, 5));
            LaurentPoly b = quotient_map(rng.algebra_element(f, 4, 5));
            if (a.is_zero() || b.is_zero()) continue;
            ++seen;
            CHECK_FALSE((a * b).is_zero());
        }
    }
}

TEST_CASE("laurent polynomial shifts and printing") {
    LaurentPoly p = quotient_map(parse_leavitt("c^2 c*^3 + v", q));
    CHECK(p.str() == "c^-1 + 1");
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 0);
    CHECK(p.shifted(2).str() == "c + c^2");
    CHECK(LaurentPoly::from_poly(parse_poly("1+x^2", q)).str() == "1 + c^2");
}

TEST_CASE("rational function arithmetic stays in lowest terms") {
    Poly x = Poly::x(q);
    RationalFunc g = RationalFunc::of(x, Poly::one(q) + x);
    CHECK(g.str() == "(c) / (1 + c)");
    // (x / (1+x)) + (1 / (1+x)) = 1.
    CHECK(g + RationalFunc::of(Poly::one(q), Poly::one(q) + x) == RationalFunc::one(q));
    // Cancellation: x(1+x) / x = 1+x.
    CHECK(RationalFunc::of(x * (Poly::one(q) + x), x) == RationalFunc::of_poly(Poly::one(q) + x));
    CHECK_THROWS_AS(RationalFunc::one(q) / RationalFunc::zero(q), error);
}

TEST_CASE("ring action on rational functions factors through the quotient") {
    Poly x = Poly::x(q);
    RationalFunc g = RationalFunc::of(Poly::one(q), Poly::one(q) + x);
    CHECK(rational_act(parse_leavitt("w", q), g).is_zero());
    CHECK(rational_act(parse_leavitt("c", q), g) == RationalFunc::of(x, Poly::one(q) + x));
    // c* acts as division by the image of c.
    CHECK(rational_act(parse_leavitt("c*", q), rational_act(parse_leavitt("c", q), g)) == g);
    CHECK(rational_act(parse_leavitt("v - c c*", q), g).is_zero());
    RandomGen rng(23);
    for (int t = 0; t < 200; ++t) {
        AlgebraElement a = rng.algebra_element(q, 3, 4);
        AlgebraElement b = rng.algebra_element(q, 3, 4);
        CHECK(rational_act(a * b, g) == rational_act(a, rational_act(b, g)));
    }
}
