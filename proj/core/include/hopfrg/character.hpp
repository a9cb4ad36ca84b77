#pragma once

#include "hopfrg/hopf.hpp"
#include "hopfrg/laurent.hpp"
#include "hopfrg/lincomb.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace hopfrg {

// A lazily evaluated, memoized linear map from H or K into the Laurent
// algebra. Copies share one memo table; recomputing a key twice is
// harmless, observing a torn value is not (the table is locked).
class LinMap {
public:
    using Fn = std::function<LaurentPoly(const Forest&)>;

    LinMap(Alg tag, Fn fn);
    // For maps whose defining formula refers to lower-degree values of the
    // map itself (counterterm-style recursions).
    static LinMap recursive(Alg tag, std::function<LaurentPoly(const LinMap&, const Forest&)> fn);

    Alg tag() const;
    LaurentPoly operator()(const Forest& f) const;
    LaurentPoly eval(const LinComb& x) const;

    // New map with every value passed through `transform`.
    LinMap map_values(std::function<LaurentPoly(const LaurentPoly&)> transform) const;

private:
    struct State;
    explicit LinMap(std::shared_ptr<State> s) : state_(std::move(s)) {}
    std::shared_ptr<State> state_;
};

// The unit of the convolution algebra: 1 on the empty forest, 0 elsewhere.
LinMap counit_map(Alg tag);

// Convolution f * g = m_A (f (x) g) Delta, associative with unit e.
LinMap convolve(const LinMap& f, const LinMap& g);

// An A-valued character, multiplicative with value 1 on the unit. It is
// either extended from generator (tree) values, with unspecified
// generators valued 0, or wraps a map that is a character by
// construction; multiplicativity of the latter is checked in tests, not
// assumed by the code.
class Character {
public:
    static Character from_generators(Alg tag, std::map<Tree, LaurentPoly> gens);
    static Character from_map(LinMap m);
    static Character neutral(Alg tag) { return from_generators(tag, {}); }

    Alg tag() const { return map_.tag(); }
    const LinMap& map() const { return map_; }
    LaurentPoly operator()(const Forest& f) const { return map_(f); }
    LaurentPoly eval(const LinComb& x) const { return map_.eval(x); }

    const std::map<Tree, LaurentPoly>* generators() const;

    Character map_values(std::function<LaurentPoly(const LaurentPoly&)> transform) const;

private:
    Character(LinMap m, std::shared_ptr<const std::map<Tree, LaurentPoly>> gens)
        : map_(std::move(m)), gens_(std::move(gens)) {}
    LinMap map_;
    std::shared_ptr<const std::map<Tree, LaurentPoly>> gens_;
};

// An infinitesimal character: 0 on the unit and on every product of
// augmentation-ideal elements, so it is determined by tree values.
class InfChar {
public:
    static InfChar from_generators(Alg tag, std::map<Tree, LaurentPoly> gens);
    static InfChar from_map(LinMap m);
    static InfChar zero(Alg tag) { return from_generators(tag, {}); }

    Alg tag() const { return map_.tag(); }
    const LinMap& map() const { return map_; }
    LaurentPoly operator()(const Forest& f) const { return map_(f); }
    LaurentPoly eval(const LinComb& x) const { return map_.eval(x); }

    const std::map<Tree, LaurentPoly>* generators() const;

    InfChar map_values(std::function<LaurentPoly(const LaurentPoly&)> transform) const;

private:
    InfChar(LinMap m, std::shared_ptr<const std::map<Tree, LaurentPoly>> gens)
        : map_(std::move(m)), gens_(std::move(gens)) {}
    LinMap map_;
    std::shared_ptr<const std::map<Tree, LaurentPoly>> gens_;
};

// phi^{*-1} = phi o S; exact convolution inverse of a character.
Character conv_inverse(const Character& f);
LinMap conv_inverse_map(const LinMap& f);

// exp* and log*, finite on each element by connectedness of the grading.
Character conv_exp(const InfChar& a);
InfChar conv_log(const Character& f);

// Brute-force checks of the defining rules on products up to max_degree.
bool is_multiplicative(const LinMap& f, int max_degree);
bool is_infinitesimal(const LinMap& f, int max_degree);

// Do two maps agree on every basis forest up to max_degree?
bool agree_up_to(const LinMap& f, const LinMap& g, int max_degree);

} // namespace hopfrg
