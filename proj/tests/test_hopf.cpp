#include "helpers.hpp"

#include "hopfrg/hopf.hpp"

#include <doctest.h>

using namespace hopfrg;

namespace {

Tensor tensor_of(Alg l, Alg r, std::initializer_list<std::tuple<const char*, const char*, int>> terms) {
    Tensor t(l, r);
    for (const auto& [a, b, c] : terms) t.add(F(a), F(b), c);
    return t;
}

} // namespace

TEST_CASE("coproduct on H") {
    CHECK(delta(Alg::H, F("1")) == tensor_of(Alg::H, Alg::H, {{"1", "1", 1}}));
    CHECK(delta(Alg::H, F("[]")) == tensor_of(Alg::H, Alg::H, {{"[]", "1", 1}, {"1", "[]", 1}}));
    CHECK(delta(Alg::H, F("[[]]")) ==
          tensor_of(Alg::H, Alg::H, {{"[[]]", "1", 1}, {"1", "[[]]", 1}, {"[]", "[]", 1}}));

    // the golden rendering the CLI prints
    CHECK(delta(Alg::H, F("[[]]")).render() == "[[]] # 1 + 1 # [[]] + [] # []");

    // ladder: both single-edge cuts, never the inadmissible pair
    CHECK(delta(Alg::H, F("[[[]]]")) ==
          tensor_of(Alg::H, Alg::H, {{"[[[]]]", "1", 1},
                                     {"1", "[[[]]]", 1},
                                     {"[]", "[[]]", 1},
                                     {"[[]]", "[]", 1}}));
}

TEST_CASE("antipode on H") {
    CHECK(antipode(Alg::H, F("1")) == LinComb::unit(Alg::H));
    CHECK(antipode(Alg::H, F("[]")) == -LinComb::basis(Alg::H, F("[]")));
    LinComb s2(Alg::H);
    s2.add(F("[[]]"), -1);
    s2.add(F("[] []"), 1);
    CHECK(antipode(Alg::H, F("[[]]")) == s2);
    CHECK(antipode(Alg::H, F("[[]]")).render() == "-1*[[]] + [] []");

    for (const Forest& f : enumerate_forests(6))
        CHECK(antipode(Alg::H, f) == antipode_alt(Alg::H, f));
}

TEST_CASE("coaction") {
    CHECK(coaction(F("1")) == tensor_of(Alg::K, Alg::H, {{"1", "1", 1}}));
    CHECK(coaction(F("[]")) == tensor_of(Alg::K, Alg::H, {{"1", "[]", 1}}));
    CHECK(coaction(F("[[]]")) ==
          tensor_of(Alg::K, Alg::H, {{"1", "[[]]", 1}, {"[[]]", "[]", 1}}));
    CHECK(coaction(F("[[[]]]")) == tensor_of(Alg::K, Alg::H,
                                             {{"1", "[[[]]]", 1},
                                              {"[[]]", "[[]]", 2},
                                              {"[[[]]]", "[]", 1}}));
}

TEST_CASE("coproduct on K") {
    CHECK(delta(Alg::K, F("1")) == tensor_of(Alg::K, Alg::K, {{"1", "1", 1}}));
    CHECK(delta(Alg::K, F("[[]]")) ==
          tensor_of(Alg::K, Alg::K, {{"[[]]", "1", 1}, {"1", "[[]]", 1}}));
    CHECK(delta(Alg::K, F("[[[]]]")) == tensor_of(Alg::K, Alg::K,
                                                  {{"[[[]]]", "1", 1},
                                                   {"1", "[[[]]]", 1},
                                                   {"[[]]", "[[]]", 2}}));
    CHECK_THROWS_AS(delta(Alg::K, F("[]")), DomainError);
}

TEST_CASE("antipode on K") {
    CHECK(antipode(Alg::K, F("1")) == LinComb::unit(Alg::K));
    CHECK(antipode(Alg::K, F("[[]]")) == -LinComb::basis(Alg::K, F("[[]]")));
    LinComb s2(Alg::K);
    s2.add(F("[[[]]]"), -1);
    s2.add(F("[[]] [[]]"), 2);
    CHECK(antipode(Alg::K, F("[[[]]]")) == s2);
}

namespace {

Tree ladder(int vertices) {
    std::vector<Tree> below;
    for (int i = 1; i < vertices; ++i) below = {Tree(std::move(below))};
    return Tree(std::move(below));
}

// S on ladders has a closed form: sum over compositions (a1,...,ak) of n
// of (-1)^k times the product of the ladders a1,...,ak.
void ladder_antipode_terms(int remaining, int parts, std::vector<Tree>& stack, LinComb& out) {
    if (remaining == 0) {
        out.add(Forest(stack), parts % 2 == 0 ? 1 : -1);
        return;
    }
    for (int a = 1; a <= remaining; ++a) {
        stack.push_back(ladder(a));
        ladder_antipode_terms(remaining - a, parts + 1, stack, out);
        stack.pop_back();
    }
}

} // namespace

TEST_CASE("ladders have closed-form coproduct and antipode") {
    for (int n = 1; n <= 6; ++n) {
        const Forest ln = Forest::single(ladder(n));

        // cutting a ladder at height i leaves the two shorter ladders
        Tensor expected(Alg::H, Alg::H);
        expected.add(ln, Forest::unit(), 1);
        expected.add(Forest::unit(), ln, 1);
        for (int i = 1; i < n; ++i)
            expected.add(Forest::single(ladder(i)), Forest::single(ladder(n - i)), 1);
        CHECK(delta(Alg::H, ln) == expected);

        LinComb s(Alg::H);
        std::vector<Tree> stack;
        ladder_antipode_terms(n, 0, stack, s);
        CHECK(antipode(Alg::H, ln) == s);
    }
}

TEST_CASE("counit") {
    CHECK(counit(LinComb::unit(Alg::H)) == 1);
    CHECK(counit(LinComb::basis(Alg::H, F("[]"))) == 0);
    LinComb x(Alg::H);
    x.add(F("1"), 3);
    x.add(F("[[]]"), 2);
    CHECK(counit(x) == 3);
}

TEST_CASE("axiom suites stay green at small degree") {
    CHECK(check_hopf_axioms(Alg::H, 4).ok());
    CHECK(check_hopf_axioms(Alg::K, 3).ok());
    CHECK(check_hopf_axioms(Alg::H, 0).ok());
    CHECK(check_compatibility(4).ok());
}
