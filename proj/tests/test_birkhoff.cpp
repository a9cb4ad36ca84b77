#include "helpers.hpp"

#include "hopfrg/birkhoff.hpp"
#include "hopfrg/random.hpp"

#include <doctest.h>

using namespace hopfrg;

namespace {

Character pole_char(const char* v1, const char* v2) {
    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[]"), L(v1));
    gens.emplace(T("[[]]"), L(v2));
    return Character::from_generators(Alg::H, gens);
}

} // namespace

TEST_CASE("base cases of the decomposition") {
    const Character phi = pole_char("z^-1", "z^-2");
    const BirkhoffPair bp = birkhoff(phi);

    CHECK(bp.minus(F("[]")) == L("-1*z^-1"));
    CHECK(bp.plus(F("[]")).is_zero());

    // the prepared value at the 2-vertex tree cancels exactly
    CHECK(bogoliubov(phi)(F("[[]]")).is_zero());
    CHECK(bp.minus(F("[[]]")).is_zero());
    CHECK(bp.plus(F("[[]]")).is_zero());

    CHECK(bogoliubov(phi)(F("[]")) == phi(F("[]")));
    CHECK(bogoliubov(phi)(F("1")).is_zero());

    // a character into A_+ needs no counterterms
    Rng rng(21);
    const Character reg = random_character(rng, Alg::H, 3, /*a_plus=*/true);
    const BirkhoffPair rp = birkhoff(reg);
    for (const Forest& f : enumerate_forests(3)) {
        CHECK(rp.minus(f) == counit_map(Alg::H)(f));
        CHECK(rp.plus(f) == reg(f));
    }

    // the preparation of the unit character vanishes off the unit
    const LinMap be = bogoliubov(Character::neutral(Alg::H));
    for (const Forest& f : enumerate_forests(3)) CHECK(be(f).is_zero());
}

TEST_CASE("the preparation is minus convolved with the reduced character") {
    Rng rng(24);
    const Character phi = random_character(rng, Alg::H, 4);
    const BirkhoffPair bp = birkhoff(phi);
    const LinMap b = bogoliubov(phi);
    const LinMap e = counit_map(Alg::H);
    const LinMap phi_minus_e(Alg::H, [phi, e](const Forest& x) { return phi(x) - e(x); });
    const LinMap via_convolution = convolve(bp.minus.map(), phi_minus_e);
    for (const Forest& f : enumerate_forests(4)) {
        CHECK(b(f) == via_convolution(f));
        // both Birkhoff parts project off the same prepared value
        if (!f.is_unit()) {
            CHECK(bp.minus(f) == -pi_minus(b(f)));
            CHECK(bp.plus(f) == pi_plus(b(f)));
        }
    }
}

TEST_CASE("decomposition contract on random characters") {
    Rng rng(22);
    for (int i = 0; i < 3; ++i) {
        const Character phi = random_character(rng, Alg::H, 4);
        const BirkhoffPair bp = birkhoff(phi);
        const LinMap recomposed = convolve(conv_inverse_map(bp.minus.map()), bp.plus.map());
        for (const Forest& f : enumerate_forests(4)) {
            CHECK(recomposed(f) == phi(f));
            if (!f.is_unit()) CHECK(bp.minus(f).in_a_minus());
            CHECK(bp.plus(f).in_a_plus());
        }
        CHECK(is_multiplicative(bp.minus.map(), 4));
        CHECK(is_multiplicative(bp.plus.map(), 4));
    }
}

TEST_CASE("series oracle agrees with the recursion") {
    const Character phi = pole_char("z^-1", "z^-2");
    const BirkhoffPair rec = birkhoff(phi);
    const BirkhoffPair ser = birkhoff_series_oracle(phi, 3);
    for (const Forest& f : enumerate_forests(3)) {
        CHECK(rec.minus(f) == ser.minus(f));
        CHECK(rec.plus(f) == ser.plus(f));
    }

    const Character e = Character::neutral(Alg::H);
    const BirkhoffPair se = birkhoff_series_oracle(e, 3);
    for (const Forest& f : enumerate_forests(3)) {
        CHECK(se.minus(f) == e(f));
        CHECK(se.plus(f) == e(f));
    }

    Rng rng(23);
    for (int i = 0; i < 3; ++i) {
        const Character f = random_character(rng, Alg::H, 3);
        const BirkhoffPair a = birkhoff(f);
        const BirkhoffPair b = birkhoff_series_oracle(f, 3);
        for (const Forest& x : enumerate_forests(3)) {
            CHECK(a.minus(x) == b.minus(x));
            CHECK(a.plus(x) == b.plus(x));
        }
    }
}
