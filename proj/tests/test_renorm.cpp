#include "helpers.hpp"

#include "hopfrg/random.hpp"
#include "hopfrg/renorm.hpp"

#include <doctest.h>

using namespace hopfrg;

namespace {

InfChar alpha_on_edge() {
    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[[]]"), L("z^0"));
    return InfChar::from_generators(Alg::K, gens);
}

Character phi_pole() {
    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[]"), L("z^-1"));
    gens.emplace(T("[[]]"), L("z^-2"));
    return Character::from_generators(Alg::H, gens);
}

AValuedComb comb(std::initializer_list<std::pair<const char*, const char*>> terms) {
    AValuedComb r;
    for (const auto& [f, v] : terms) r.add(F(f), L(v));
    return r;
}

} // namespace

TEST_CASE("the biderivation from an infinitesimal K-character") {
    const InfChar alpha = alpha_on_edge();
    CHECK(b_alpha(alpha, F("[]")).is_zero());
    CHECK(b_alpha(alpha, F("[[]]")) == comb({{"[]", "z^0"}}));
    CHECK(b_alpha(alpha, F("[[[]]]")) == comb({{"[[]]", "2*z^0"}}));
    // the coaction-primitive products of vertices are in the kernel
    CHECK(b_alpha(alpha, F("[] [] []")).is_zero());
}

TEST_CASE("star action") {
    const InfChar alpha = alpha_on_edge();
    const Character phi = phi_pole();
    const Character e = Character::neutral(Alg::H);

    const LinMap on_e = star_action(alpha.map(), e.map());
    CHECK(on_e(F("1")).is_zero()); // alpha(1_K) = 0
    CHECK(on_e(F("[[]]")).is_zero());

    CHECK(star_action(alpha.map(), phi.map())(F("[[]]")) == phi(F("[]")));

    // action property through the comodule structure
    Rng rng(31);
    const Character g = random_character(rng, Alg::K, 3);
    const Character g2 = random_character(rng, Alg::K, 3);
    const LinMap nested = star_action(g.map(), star_action(g2.map(), phi.map()));
    const LinMap joined = star_action(convolve(g.map(), g2.map()), phi.map());
    for (const Forest& f : enumerate_forests(4)) CHECK(nested(f) == joined(f));
}

TEST_CASE("the Dynkin-style operator") {
    const InfChar alpha = alpha_on_edge();
    CHECK(e_alpha(alpha, F("[]")).is_zero());
    CHECK(e_alpha(alpha, F("[[]]")) == comb({{"[]", "z^0"}}));

    // composing a character with it computes the gamma of the flow equation
    Rng rng(32);
    const Character phi = random_character(rng, Alg::H, 4);
    const InfChar gamma = r_tilde(phi, alpha);
    for (const Forest& f : enumerate_forests(4))
        CHECK(apply_linmap(phi.map(), e_alpha(alpha, f)) == gamma(f));
}

TEST_CASE("z twist") {
    const Character e = Character::neutral(Alg::K);
    for (const Forest& f : enumerate_k_forests(3)) CHECK(z_twist(e)(f) == e(f));

    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[[]]"), L("z^0"));
    const Character g = conv_exp(InfChar::from_generators(Alg::K, gens));
    CHECK(z_twist(g)(F("[[]]")) == L("z^1"));

    Rng rng(33);
    const Character h = random_character(rng, Alg::K, 3);
    const Character round = z_twist(z_twist(h), /*inverse=*/true);
    for (const Forest& f : enumerate_k_forests(3)) CHECK(round(f) == h(f));
}

TEST_CASE("the twisted action") {
    // (g ⋆_z phi) = (Z(g) ⋆ phi); the action property holds through the twist
    Rng rng(34);
    const Character g = random_character(rng, Alg::K, 2);
    const Character g2 = random_character(rng, Alg::K, 2);
    const Character phi = random_character(rng, Alg::H, 3);
    const LinMap zg = z_twist(g).map();
    const LinMap zg2 = z_twist(g2).map();
    const LinMap nested = star_action(zg, star_action(zg2, phi.map()));
    // g ⋆_z g' = Z^{-1}(Z(g) * Z(g')), so acting by it twists back to the product
    const Character prod_z =
        z_twist(Character::from_map(convolve(zg, zg2)), /*inverse=*/true);
    const LinMap joined = star_action(z_twist(prod_z).map(), phi.map());
    for (const Forest& f : enumerate_forests(3)) CHECK(nested(f) == joined(f));
}

TEST_CASE("flow") {
    const InfChar alpha = alpha_on_edge();
    const Character phi = phi_pole();

    // the unit character does not move
    const FlowCharacter fe = flow(Character::neutral(Alg::H), alpha);
    for (const Forest& f : enumerate_forests(3))
        CHECK(fe.character(f) == Character::neutral(Alg::H)(f));

    // one exponential step on the 2-vertex tree
    const FlowCharacter ft = flow(phi, alpha);
    CHECK(ft.character(F("[[]]")) == phi(F("[[]]")) + L("(t)*z^0"));
    CHECK(ft.character(F("[]")) == phi(F("[]")));

    // substituting t = 0 recovers the base character
    for (const Forest& f : enumerate_forests(4)) CHECK(ft.at_zero()(f) == phi(f));

    // d/dt phi_t = (z alpha) ⋆ phi_t
    const LinMap rhs = star_action(alpha.map().map_values([](const LaurentPoly& v) {
        return v.shift_z(1);
    }), ft.character.map());
    for (const Forest& f : enumerate_forests(4))
        CHECK(d_param(ft.character(f), "t") == rhs(f));

    // the flow respects products
    CHECK(is_multiplicative(ft.character.map(), 4));

    // alpha with poles is rejected
    std::map<Tree, LaurentPoly> bad;
    bad.emplace(T("[[]]"), L("z^-1"));
    CHECK_THROWS_AS(flow(phi, InfChar::from_generators(Alg::K, bad)), DomainError);
}

TEST_CASE("h flow") {
    const InfChar alpha = alpha_on_edge();
    const Character phi = phi_pole();
    const FlowCharacter h = h_flow(phi, alpha);
    for (const Forest& f : enumerate_forests(4))
        CHECK(h.at_zero()(f) == Character::neutral(Alg::H)(f));
}

TEST_CASE("r tilde") {
    const InfChar alpha = alpha_on_edge();
    const Character e = Character::neutral(Alg::H);
    for (const Forest& f : enumerate_forests(3)) CHECK(r_tilde(e, alpha)(f).is_zero());

    const Character phi = phi_pole();
    const InfChar gamma = r_tilde(phi, alpha);
    CHECK(gamma(F("[]")).is_zero()); // always, whatever phi and alpha
    CHECK(gamma(F("[[]]")) == L("z^-1"));
    CHECK(is_infinitesimal(gamma.map(), 4));
}

TEST_CASE("r alpha on infinitesimal characters") {
    const InfChar alpha = alpha_on_edge();
    const InfChar zero = InfChar::zero(Alg::H);
    for (const Forest& f : enumerate_forests(3))
        CHECK(r_alpha(zero, alpha, RMethod::direct)(f).is_zero());

    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[]"), L("2*z^0 + z^1"));
    gens.emplace(T("[[]]"), L("z^-1"));
    const InfChar a = InfChar::from_generators(Alg::H, gens);

    // at the 2-vertex tree the bracket corrections cancel and only
    // a([]) alpha(edge) survives
    CHECK(r_alpha(a, alpha, RMethod::direct)(F("[[]]")) == a(F("[]")));
    CHECK(r_alpha(a, alpha, RMethod::integral)(F("[[]]")) == a(F("[]")));

    Rng rng(35);
    const InfChar b = random_infchar(rng, Alg::H, 4);
    const InfChar al = random_infchar(rng, Alg::K, 3);
    const InfChar direct = r_alpha(b, al, RMethod::direct);
    const InfChar integral = r_alpha(b, al, RMethod::integral);
    for (const Forest& f : enumerate_forests(4)) CHECK(direct(f) == integral(f));
}

TEST_CASE("locality") {
    const InfChar alpha = alpha_on_edge();

    CHECK(locality_check(Character::neutral(Alg::H), alpha, 3).ok());

    Rng rng(36);
    const Character reg = random_character(rng, Alg::H, 3, /*a_plus=*/true);
    CHECK(locality_check(reg, alpha, 3).ok());

    // phi([]) = phi([[]]) = z^-1 is local through degree 2 but not 3
    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[]"), L("z^-1"));
    gens.emplace(T("[[]]"), L("z^-1"));
    const Character phi = Character::from_generators(Alg::H, gens);
    CHECK(locality_check(phi, alpha, 2).ok());
    const Report deep = locality_check(phi, alpha, 3);
    CHECK_FALSE(deep.ok());
    bool ladder_violation = false;
    for (const auto& f : deep.failures)
        if (f.item == "[[[]]]") ladder_violation = true;
    CHECK(ladder_violation);
}

TEST_CASE("rg flow and beta") {
    const InfChar alpha = alpha_on_edge();

    // the unit character has a trivial group
    const FlowCharacter fe = rg_flow(Character::neutral(Alg::H), alpha);
    for (const Forest& f : enumerate_forests(3))
        CHECK(fe.character(f) == Character::neutral(Alg::H)(f));
    for (const Forest& f : enumerate_forests(3))
        CHECK(beta(Character::neutral(Alg::H), alpha, BetaMethod::residue)(f).is_zero());

    // a regular character: F_t exists and is computed exactly
    Rng rng(37);
    const Character reg = random_character(rng, Alg::H, 3, /*a_plus=*/true);
    const FlowCharacter fr = rg_flow(reg, alpha);
    const FlowCharacter h = h_flow(reg, alpha);
    for (const Forest& f : enumerate_forests(3))
        CHECK(fr.character(f) == LaurentPoly(const_term(h.character(f))));
}

TEST_CASE("counterterm solver") {
    const InfChar alpha = alpha_on_edge();

    // zero target: the unit character and nothing else
    const LocalSolveResult trivial = construct_local_minus(alpha, InfChar::zero(Alg::H), 3);
    REQUIRE(trivial.feasible);
    for (const Forest& f : enumerate_forests(3))
        CHECK(trivial.phi(f) == Character::neutral(Alg::H)(f));
    CHECK(trivial.locality.ok());

    // gamma always vanishes in degree 1, so chi([]) != 0 cannot be hit
    std::map<Tree, LaurentPoly> bad;
    bad.emplace(T("[]"), L("z^0"));
    const LocalSolveResult infeasible =
        construct_local_minus(alpha, InfChar::from_generators(Alg::H, bad), 2);
    CHECK_FALSE(infeasible.feasible);
    CHECK(infeasible.failed_degree == 1);

    // the solver requires constant-valued inputs
    std::map<Tree, LaurentPoly> poley;
    poley.emplace(T("[[]]"), L("z^-1"));
    CHECK_THROWS_AS(
        construct_local_minus(InfChar::from_generators(Alg::K, poley), InfChar::zero(Alg::H), 2),
        DomainError);
    CHECK_THROWS_AS(
        construct_local_minus(alpha, InfChar::from_generators(Alg::H, poley), 2), DomainError);

    // a target on the 2-vertex tree pins phi([]) at depth 2
    std::map<Tree, LaurentPoly> chi2;
    chi2.emplace(T("[[]]"), L("z^0"));
    const LocalSolveResult depth2 =
        construct_local_minus(alpha, InfChar::from_generators(Alg::H, chi2), 2);
    REQUIRE(depth2.feasible);
    CHECK(depth2.phi(F("[]")) == L("z^-1"));
    CHECK(depth2.locality.ok());
    const InfChar gamma = r_tilde(depth2.phi, alpha);
    CHECK(gamma(F("[[]]")).shift_z(1) == L("z^0"));
    // beta recovers the target
    for (const Forest& f : enumerate_forests(2))
        CHECK(beta(depth2.phi, alpha, BetaMethod::residue)(f) ==
              InfChar::from_generators(Alg::H, chi2)(f));
}
