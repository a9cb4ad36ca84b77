#include "helpers.hpp"

#include "hopfrg/random.hpp"

#include <doctest.h>

#include <atomic>
#include <thread>

using namespace hopfrg;

namespace {

Character simple_phi() {
    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[]"), L("z^-1"));
    gens.emplace(T("[[]]"), L("z^-2"));
    return Character::from_generators(Alg::H, gens);
}

} // namespace

TEST_CASE("evaluation rules") {
    const Character phi = simple_phi();
    CHECK(phi(F("1")) == L("z^0"));
    CHECK(phi(F("[] []")) == L("z^-2"));      // multiplicative
    CHECK(phi(F("[[][]]")).is_zero());        // unknown generator

    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[]"), L("3*z^0"));
    const InfChar a = InfChar::from_generators(Alg::H, gens);
    CHECK(a(F("[]")) == L("3*z^0"));
    CHECK(a(F("[] []")).is_zero()); // products of the augmentation ideal vanish
    CHECK(a(F("1")).is_zero());

    const LinMap e = counit_map(Alg::H);
    CHECK(e(F("1")) == L("z^0"));
    CHECK(e(F("[[]]")).is_zero());

    LinComb x(Alg::H);
    x.add(F("[]"), 2);
    x.add(F("1"), 5);
    CHECK(phi.eval(x) == L("2*z^-1 + 5*z^0"));
}

TEST_CASE("convolution") {
    const Character phi = simple_phi();
    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[]"), L("z^0"));
    gens.emplace(T("[[]]"), L("z^1"));
    const Character psi = Character::from_generators(Alg::H, gens);

    CHECK(convolve(counit_map(Alg::H), phi.map())(F("[[]] []")) == phi(F("[[]] []")));
    CHECK(convolve(phi.map(), counit_map(Alg::H))(F("[[[]]]")) == phi(F("[[[]]]")));

    CHECK(convolve(phi.map(), psi.map())(F("[]")) == L("z^-1 + z^0"));
    // three coproduct terms of the 2-vertex tree
    CHECK(convolve(phi.map(), psi.map())(F("[[]]")) ==
          phi(F("[[]]")) + psi(F("[[]]")) + phi(F("[]")) * psi(F("[]")));

    // associativity and unit on random characters
    Rng rng(3);
    const Character f = random_character(rng, Alg::H, 5);
    const Character g = random_character(rng, Alg::H, 5);
    const Character h = random_character(rng, Alg::H, 5);
    const LinMap left = convolve(convolve(f.map(), g.map()), h.map());
    const LinMap right = convolve(f.map(), convolve(g.map(), h.map()));
    for (const Forest& x : enumerate_forests(5)) {
        CHECK(left(x) == right(x));
        CHECK(convolve(counit_map(Alg::H), f.map())(x) == f(x));
    }
}

TEST_CASE("convolution inverse") {
    const Character e = Character::neutral(Alg::H);
    for (const Forest& x : enumerate_forests(4)) CHECK(conv_inverse(e)(x) == e(x));

    const Character phi = simple_phi();
    CHECK(conv_inverse(phi)(F("[]")) == -L("z^-1"));
    CHECK(conv_inverse(phi)(F("[[]]")) == -phi(F("[[]]")) + phi(F("[]")) * phi(F("[]")));

    Rng rng(5);
    const Character f = random_character(rng, Alg::H, 5);
    const LinMap left = convolve(conv_inverse(f).map(), f.map());
    const LinMap right = convolve(f.map(), conv_inverse(f).map());
    const LinMap e_map = counit_map(Alg::H);
    for (const Forest& x : enumerate_forests(5)) {
        CHECK(left(x) == e_map(x));
        CHECK(right(x) == e_map(x));
    }
}

TEST_CASE("exponential and logarithm") {
    const Character exp_zero = conv_exp(InfChar::zero(Alg::H));
    for (const Forest& x : enumerate_forests(4))
        CHECK(exp_zero(x) == counit_map(Alg::H)(x));

    std::map<Tree, LaurentPoly> gens;
    gens.emplace(T("[]"), L("(t)*z^0"));
    const InfChar a = InfChar::from_generators(Alg::H, gens);
    const Character ea = conv_exp(a);
    CHECK(ea(F("[]")) == L("(t)*z^0"));
    CHECK(ea(F("[] []")) == L("(t^2)*z^0"));

    // log is a two-sided inverse of exp at bounded degree
    Rng rng(9);
    const InfChar b = random_infchar(rng, Alg::H, 4);
    const InfChar back = conv_log(conv_exp(b));
    for (const Forest& x : enumerate_forests(4)) CHECK(back(x) == b(x));

    const Character f = random_character(rng, Alg::H, 4);
    const Character forth = conv_exp(conv_log(f));
    for (const Forest& x : enumerate_forests(4)) CHECK(forth(x) == f(x));
}

TEST_CASE("memoized maps are safe to share across threads") {
    Rng rng(17);
    const Character phi = random_character(rng, Alg::H, 5);
    const auto forests = enumerate_forests(5);

    std::map<Forest, LaurentPoly> sequential;
    {
        const LinMap gamma = convolve(conv_inverse(phi).map(), phi.map());
        for (const Forest& f : forests) sequential.emplace(f, gamma(f));
    }

    // a second map with empty memo tables, raced by four threads
    const LinMap fresh = convolve(conv_inverse(phi).map(), phi.map());
    std::vector<std::thread> workers;
    std::atomic<bool> torn{false};
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&] {
            for (const Forest& f : forests)
                if (!(fresh(f) == sequential.at(f))) torn = true;
        });
    for (auto& t : workers) t.join();
    CHECK_FALSE(torn.load());
}

TEST_CASE("multiplicative and infinitesimal predicates") {
    CHECK(is_multiplicative(counit_map(Alg::H), 4));
    CHECK(is_multiplicative(simple_phi().map(), 4));
    CHECK_FALSE(is_multiplicative(InfChar::zero(Alg::H).map(), 2));

    Rng rng(13);
    CHECK(is_infinitesimal(random_infchar(rng, Alg::H, 4).map(), 4));
    CHECK(is_infinitesimal(conv_log(random_character(rng, Alg::H, 4)).map(), 4));
    CHECK_FALSE(is_infinitesimal(simple_phi().map(), 4));
    CHECK(is_multiplicative(conv_exp(random_infchar(rng, Alg::H, 4)).map(), 4));

    // the same machinery runs on K
    const Character k_char = random_character(rng, Alg::K, 3);
    CHECK(is_multiplicative(k_char.map(), 3));
    CHECK(is_infinitesimal(conv_log(k_char).map(), 3));
}
