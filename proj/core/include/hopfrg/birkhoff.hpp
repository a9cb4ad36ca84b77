#pragma once

#include "hopfrg/character.hpp"

namespace hopfrg {

// Birkhoff decomposition under minimal subtraction: f = minus^{*-1} * plus
// with minus mapping the augmentation ideal into A_- and plus mapping
// everything into A_+. Both parts are characters (the projection is
// Rota-Baxter); that is verified in tests rather than assumed.
struct BirkhoffPair {
    Character minus;
    Character plus;
};

BirkhoffPair birkhoff(const Character& f);

// Bogoliubov preparation b(f) = minus * (f - e); zero on the unit, and
// minus = -pi o b(f) on the augmentation ideal.
LinMap bogoliubov(const Character& f);

// Fixed-point iteration for both parts (the P / P-tilde series). Converges
// in at most max_degree steps by the grading; used as an independent
// oracle against the recursive decomposition.
BirkhoffPair birkhoff_series_oracle(const Character& f, int max_degree);

} // namespace hopfrg
