#pragma once

#include "hopfrg/character.hpp"

#include <cstdint>
#include <vector>

namespace hopfrg {

// Deterministic generator (splitmix64) so seeded suites reproduce
// bit-for-bit on every platform; the standard distributions are not
// portable across library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // inclusive bounds
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool flip() { return next() & 1; }

    Rational small_rational() {
        int num = uniform(-4, 4);
        if (num == 0) num = 1;
        return Rational(num) / uniform(1, 3);
    }

    LaurentPoly laurent(int min_exp, int max_exp);

private:
    std::uint64_t state_;
};

// Seeded test characters: each tree of degree <= max_degree gets a Laurent
// value with z exponents in [-deg(tree), +2] (pole order bounded by the
// degree, as regularized Feynman rules behave); a_plus restricts the
// exponents to [0, +2].
Character random_character(Rng& rng, Alg tag, int max_degree, bool a_plus = false);

// Seeded infinitesimal characters; `constant` draws plain rationals.
InfChar random_infchar(Rng& rng, Alg tag, int max_degree, bool a_plus = false,
                       bool constant = false);

} // namespace hopfrg
