#pragma once

#include "hopfrg/lincomb.hpp"
#include "hopfrg/report.hpp"

namespace hopfrg {

// Structure maps of the two Hopf algebras and the coaction between them.
//
// delta(H, -) is the Connes-Kreimer coproduct (trivial terms plus
// admissible cuts, extended multiplicatively); delta(K, -) is the
// extraction-contraction coproduct with both legs K-normalized; the
// coaction sends H into K (x) H, keeping the contracted leg in H.
// All per-forest results are memoized.

// The per-forest maps return references into the memo tables, which are
// never invalidated, so results can be iterated in place.
const Tensor& delta(Alg tag, const Forest& f);
Tensor delta(Alg tag, const LinComb& x);

// Coproduct minus the trivial terms f (x) 1 + 1 (x) f; zero on the unit.
const Tensor& reduced_delta(Alg tag, const Forest& f);

const LinComb& antipode(Alg tag, const Forest& f);
LinComb antipode(Alg tag, const LinComb& x);
// Same antipode from the mirrored recursion (used as a cross-check).
const LinComb& antipode_alt(Alg tag, const Forest& f);

const Tensor& coaction(const Forest& f); // K (x) H
Tensor coaction(const LinComb& x);

Rational counit(const LinComb& x);
Rational counit(const Forest& f);

// Brute-force verifiers. Both return a Report whose failures list is
// expected to stay empty.
Report check_hopf_axioms(Alg tag, int max_degree);
Report check_compatibility(int max_vertices);

} // namespace hopfrg
