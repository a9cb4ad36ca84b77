#pragma once

#include "hopfrg/forest.hpp"
#include "hopfrg/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace hopfrg {

// The two Hopf algebras in play: H is graded by vertices, K by edges.
// K-basis forests are K-normal (no single-vertex tree).
enum class Alg { H, K };

inline const char* alg_name(Alg a) { return a == Alg::H ? "H" : "K"; }
int degree(Alg a, const Forest& f);
void require_basis(Alg a, const Forest& f); // throws DomainError on K violation

// Finite rational linear combination of basis forests of one algebra.
class LinComb {
public:
    explicit LinComb(Alg tag) : tag_(tag) {}
    static LinComb zero(Alg tag) { return LinComb(tag); }
    static LinComb unit(Alg tag);
    static LinComb basis(Alg tag, const Forest& f);

    Alg tag() const { return tag_; }
    const std::map<Forest, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Forest& f) const;

    void add(const Forest& f, const Rational& c);

    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    LinComb operator+(const LinComb& o) const;
    LinComb operator-(const LinComb& o) const;
    LinComb operator-() const;
    LinComb operator*(const Rational& c) const;
    bool operator==(const LinComb& o) const { return tag_ == o.tag_ && terms_ == o.terms_; }

    std::string render() const;

private:
    Alg tag_;
    std::map<Forest, Rational> terms_;
};

LinComb lincomb_mul(const LinComb& a, const LinComb& b);

// Rational linear combination of basis pairs (two-leg tensors).
class Tensor {
public:
    Tensor(Alg left, Alg right) : left_(left), right_(right) {}
    static Tensor basis(Alg l, Alg r, const Forest& fl, const Forest& fr);

    Alg left_tag() const { return left_; }
    Alg right_tag() const { return right_; }
    const std::map<std::pair<Forest, Forest>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Forest& l, const Forest& r, const Rational& c);
    Tensor& operator+=(const Tensor& o);
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const Rational& c) const;
    bool operator==(const Tensor& o) const {
        return left_ == o.left_ && right_ == o.right_ && terms_ == o.terms_;
    }

    // Componentwise product; this is how coproducts extend to products.
    Tensor mul(const Tensor& o) const;

    std::string render() const;

private:
    Alg left_, right_;
    std::map<std::pair<Forest, Forest>, Rational> terms_;
};

// Three-leg tensors, used by the coassociativity and compatibility checks.
class Tensor3 {
public:
    Tensor3(Alg a, Alg b, Alg c) : tags_{a, b, c} {}

    const std::map<std::array<Forest, 3>, Rational>& terms() const { return terms_; }
    void add(const Forest& a, const Forest& b, const Forest& c, const Rational& coef);
    bool operator==(const Tensor3& o) const { return tags_ == o.tags_ && terms_ == o.terms_; }
    Tensor3 operator-(const Tensor3& o) const;
    bool is_zero() const { return terms_.empty(); }

    std::string render() const;

private:
    std::array<Alg, 3> tags_;
    std::map<std::array<Forest, 3>, Rational> terms_;
};

} // namespace hopfrg
