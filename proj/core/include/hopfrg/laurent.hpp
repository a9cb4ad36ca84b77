#pragma once

#include "hopfrg/parampoly.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace hopfrg {

// The target algebra A: Laurent polynomials in the regulator z with
// ParamPoly coefficients, split as A = A_- (strictly negative z powers)
// (+) A_+ (powers >= 0). The minimal scheme sits at z = 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c); // NOLINT: constants embed at z^0
    LaurentPoly(const ParamPoly& p);
    static LaurentPoly z_power(int k);
    static LaurentPoly term(int k, const ParamPoly& coeff);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, ParamPoly>& coeffs() const { return coeffs_; }
    ParamPoly coeff(int k) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly operator*(const Rational& c) const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

    // Multiply by z^k (shift every exponent).
    LaurentPoly shift_z(int k) const;
    LaurentPoly scale(const ParamPoly& p) const;

    bool in_a_plus() const; // no negative exponents
    bool in_a_minus() const; // only negative exponents

    std::string render() const;

private:
    void add_term(int k, const ParamPoly& p);
    std::map<int, ParamPoly> coeffs_;
};

// Projection onto A_- parallel to A_+ (the Rota-Baxter operator of the
// minimal scheme) and its complement.
LaurentPoly pi_minus(const LaurentPoly& a);
LaurentPoly pi_plus(const LaurentPoly& a);

// Coefficient of z^-1.
ParamPoly residue(const LaurentPoly& a);

// Coefficient of z^0; throws PoleAtZero if any negative power survives.
ParamPoly const_term(const LaurentPoly& a);

// Formal parameter calculus, coefficient-wise.
LaurentPoly d_param(const LaurentPoly& a, const std::string& name);
LaurentPoly subst_param(const LaurentPoly& a, const std::string& name, const ParamPoly& value);

// Declared parameter names; the parser rejects identifiers outside the
// set. The flow parameter "t" and the group-law parameter "s" are always
// declared.
class ParamSet {
public:
    ParamSet() : names_{"s", "t"} {}
    explicit ParamSet(std::set<std::string> names) : names_(std::move(names)) {
        names_.insert("s");
        names_.insert("t");
    }
    bool contains(const std::string& name) const { return names_.count(name) > 0; }
    void declare(const std::string& name) { names_.insert(name); }
    const std::set<std::string>& names() const { return names_; }

private:
    std::set<std::string> names_;
};

// Grammar: sum of terms  coef "*"? "z^" int | coef,  with
// coef := rational | "(" parameter polynomial ")" | parameter name.
// Example: "3/2*z^-2 + (1+2*t)*z^0 + z^3". Rendering lists terms in
// increasing z exponent and always writes the exponent.
LaurentPoly parse_laurent(std::string_view text, const ParamSet& params = ParamSet());

} // namespace hopfrg
