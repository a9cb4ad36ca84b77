#pragma once

#include "hopfrg/birkhoff.hpp"
#include "hopfrg/character.hpp"
#include "hopfrg/report.hpp"

namespace hopfrg {

// Element of A (x) H: finitely many H-basis forests with Laurent
// coefficients. Values of B_alpha and E_alpha live here.
class AValuedComb {
public:
    const std::map<Forest, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Forest& f, const LaurentPoly& v);
    AValuedComb operator+(const AValuedComb& o) const;
    AValuedComb scale(const LaurentPoly& v) const;
    bool operator==(const AValuedComb& o) const { return terms_ == o.terms_; }
    std::string render() const;

private:
    std::map<Forest, LaurentPoly> terms_;
};

// B_alpha = (alpha (x) Id) o Phi: pairs alpha with the extracted K-leg of
// the coaction and keeps the contracted H-leg. A derivation of H.
AValuedComb b_alpha(const InfChar& alpha, const Forest& x);
AValuedComb b_alpha(const InfChar& alpha, const LinComb& x);

// E_alpha = S * B_alpha, the analogue of the Dynkin operator.
AValuedComb e_alpha(const InfChar& alpha, const Forest& x);

// Evaluate an H-linear map against the H-legs: sum a * phi(h).
LaurentPoly apply_linmap(const LinMap& phi, const AValuedComb& v);

// (beta ⋆ phi)(x) = sum beta(K-leg) phi(H-leg) over the coaction. beta may
// be any K-linear map (character or infinitesimal).
LinMap star_action(const LinMap& beta, const LinMap& phi);

// Z: exp* X -> exp* (z^{+-1} X) on K-characters.
Character z_twist(const Character& g, bool inverse = false);

// A character whose values are polynomial in a formal flow parameter;
// substituting 0 for the parameter recovers the base character.
struct FlowCharacter {
    Character character;
    std::string param;
    Character base;

    Character at(const ParamPoly& value) const;
    Character at_zero() const { return at(ParamPoly(Rational(0))); }
};

// The one-parameter flow phi_t = exp*(t z alpha) ⋆ phi. alpha must be
// given by generators with values in A_+.
FlowCharacter flow(const Character& phi, const InfChar& alpha, const std::string& t_name = "t");

// h_t = phi^{*-1} * phi_t; the renormalization group is its z -> 0 limit.
FlowCharacter h_flow(const Character& phi, const InfChar& alpha, const std::string& t_name = "t");

// gamma with alpha ⋆ phi = phi * gamma; infinitesimal, vanishing in
// degrees 0 and 1.
InfChar r_tilde(const Character& phi, const InfChar& alpha);

enum class RMethod { direct, integral };

// R_alpha on infinitesimal characters: direct = r_tilde(exp* a), integral
// = the (1 - e^{-ad a})/(ad a) series applied to a o B_alpha.
InfChar r_alpha(const InfChar& a, const InfChar& alpha, RMethod method);

// Locality test: the Birkhoff minus part of phi_t must be independent of
// the flow parameter on every forest up to max_degree.
Report locality_check(const Character& phi, const InfChar& alpha, int max_degree,
                      const std::string& t_name = "t");

// F_t(x) = const term in z of h_t(x). Lazily evaluated; a PoleAtZero is
// thrown through to the caller (it signals non-locality), never dropped.
FlowCharacter rg_flow(const Character& phi, const InfChar& alpha, const std::string& t_name = "t");

enum class BetaMethod { generator, residue, counterterm };

// The beta function of a local character: all three methods agree there.
InfChar beta(const Character& phi, const InfChar& alpha, BetaMethod method,
             const std::string& t_name = "t");

// Degree-by-degree linear solve for phi with values in A_- and
// z * r_tilde(phi) = chi up to max_degree; free coefficients are set to
// zero. alpha and chi must be constant-valued. The returned locality
// report re-verifies the solution.
struct LocalSolveResult {
    bool feasible = false;
    int failed_degree = 0;
    std::string detail;
    Character phi = Character::neutral(Alg::H);
    Report locality;
};

LocalSolveResult construct_local_minus(const InfChar& alpha, const InfChar& chi, int max_degree);

} // namespace hopfrg
