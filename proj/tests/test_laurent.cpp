#include "helpers.hpp"

#include "hopfrg/random.hpp"

#include <doctest.h>

using namespace hopfrg;

TEST_CASE("ring operations") {
    CHECK(L("z^-1") * L("z^-1") == L("z^-2"));
    CHECK((L("z^-1") + L("z^0")) * L("z^1") == L("z^0 + z^1"));
    CHECK(L("(t)*z^-1") * L("2*z^1") == L("(2*t)*z^0"));
    CHECK((L("z^2") - L("z^2")).is_zero());
}

TEST_CASE("minimal-subtraction splitting") {
    CHECK(pi_minus(L("3*z^-2 + 5*z^0 + z^1")) == L("3*z^-2"));
    CHECK(pi_minus(L("7*z^0")).is_zero());
    CHECK(pi_plus(L("3*z^-2 + 5*z^0 + z^1")) == L("5*z^0 + z^1"));

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly a = rng.laurent(-3, 3);
        const LaurentPoly b = rng.laurent(-3, 3);
        // Rota-Baxter identity for the pole projection
        CHECK(pi_minus(a) * pi_minus(b) ==
              pi_minus(pi_minus(a) * b + a * pi_minus(b) - a * b));
        CHECK(pi_minus(pi_minus(a)) == pi_minus(a));
        CHECK(pi_minus(a) + pi_plus(a) == a);
        CHECK(pi_minus(a).in_a_minus());
        CHECK(pi_plus(a).in_a_plus());
    }
}

TEST_CASE("residue and constant term") {
    CHECK(residue(L("3*z^-1 + 2*z^0 + z^1")) == ParamPoly(Rational(3)));
    CHECK(residue(L("5*z^0")).is_zero());
    CHECK(residue(L("(t)*z^-1")) == ParamPoly::variable("t"));
    CHECK(const_term(L("2*z^0 + z^1")) == ParamPoly(Rational(2)));
    CHECK(const_term(L("(t)*z^0")) == ParamPoly::variable("t"));
    CHECK_THROWS_AS(const_term(L("z^-1")), PoleAtZero);
}

TEST_CASE("parameter calculus") {
    CHECK(d_param(L("(t^2)*z^-1"), "t") == L("(2*t)*z^-1"));
    CHECK(subst_param(L("z^0 + (t)*z^1"), "t", ParamPoly(Rational(0))) == L("z^0"));

    const ParamPoly s_plus_t = ParamPoly::variable("s") + ParamPoly::variable("t");
    CHECK(subst_param(L("(t^2)*z^0"), "t", s_plus_t) == L("(s^2+2*s*t+t^2)*z^0"));

    // derivation and morphism laws on random values
    Rng rng(11);
    const ParamPoly t = ParamPoly::variable("t");
    for (int i = 0; i < 25; ++i) {
        const LaurentPoly a = rng.laurent(-2, 2).scale(t) + rng.laurent(-1, 1);
        const LaurentPoly b = rng.laurent(-2, 2).scale(t * t) + rng.laurent(0, 2);
        CHECK(d_param(a * b, "t") == d_param(a, "t") * b + a * d_param(b, "t"));
        const ParamPoly value = ParamPoly::variable("s") + ParamPoly(Rational(2));
        CHECK(subst_param(a * b, "t", value) ==
              subst_param(a, "t", value) * subst_param(b, "t", value));
        CHECK(subst_param(a + b, "t", value) ==
              subst_param(a, "t", value) + subst_param(b, "t", value));
    }
}

TEST_CASE("value grammar round trip") {
    const char* samples[] = {
        "0",
        "z^0",
        "3/2*z^-2 + (1+2*t)*z^0 + z^3",
        "-1*z^-1 + -1/2*z^2",
        "(t^2-s*t)*z^-3",
        "(-1/3+t)*z^1",
    };
    for (const char* s : samples) CHECK(parse_laurent(L(s).render()) == L(s));

    CHECK(L(" 3/2 * z^-2 ") == L("3/2*z^-2"));
    CHECK(L("2") == L("2*z^0"));
    CHECK(L("t") == L("(t)*z^0"));
    CHECK(L("z^1 - z^1").is_zero());
    CHECK(L("3z^2") == L("3*z^2"));
}

TEST_CASE("value grammar errors") {
    CHECK_THROWS_AS(L(""), ParseError);
    CHECK_THROWS_AS(L("z^"), ParseError);
    CHECK_THROWS_AS(L("3*"), ParseError);
    CHECK_THROWS_AS(L("(1+q)*z^0"), ParseError); // q is not declared
    CHECK_THROWS_AS(L("3 4"), ParseError);
    CHECK_THROWS_AS(L("1/0"), ParseError);
    CHECK_THROWS_AS(L("z^0 $"), ParseError);

    ParamSet with_q;
    with_q.declare("q");
    CHECK(parse_laurent("(1+q)*z^0", with_q).coeff(0) ==
          ParamPoly(Rational(1)) + ParamPoly::variable("q"));
}
