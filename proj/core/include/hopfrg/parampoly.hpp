#pragma once

#include "hopfrg/rational.hpp"

#include <map>
#include <string>

namespace hopfrg {

// Multivariate polynomial over the rationals in named formal parameters
// (t, s, ...). These are the coefficients of the Laurent algebra; the flow
// parameter of the renormalization group lives here.
class ParamPoly {
public:
    // monomial = parameter name -> exponent (>= 1 entries only)
    using Monomial = std::map<std::string, int>;

    ParamPoly() = default;
    ParamPoly(const Rational& c); // NOLINT: implicit by design, constants embed
    static ParamPoly variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; equals the whole value iff is_constant().
    Rational constant_value() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator-() const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o);
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    ParamPoly pow(int n) const;
    ParamPoly derivative(const std::string& name) const;
    ParamPoly substitute(const std::string& name, const ParamPoly& value) const;
    bool depends_on(const std::string& name) const;

    // "0", "3", "-1/2", "1+2*t", "t^2-s*t"
    std::string render() const;

private:
    std::map<Monomial, Rational> terms_;
};

} // namespace hopfrg
