#include "hopfrg/birkhoff.hpp"

namespace hopfrg {

namespace {

// b(f)(x) = f(x) + sum minus(x') f(x'') over the reduced coproduct.
LaurentPoly bogoliubov_value(const Character& f, const LinMap& minus, const Forest& x) {
    LaurentPoly b = f(x);
    for (const auto& [legs, c] : reduced_delta(f.tag(), x).terms())
        b += (minus(legs.first) * f(legs.second)) * c;
    return b;
}

LinMap minus_map(const Character& f) {
    return LinMap::recursive(f.tag(), [f](const LinMap& self, const Forest& x) {
        if (x.is_unit()) return LaurentPoly(Rational(1));
        return -pi_minus(bogoliubov_value(f, self, x));
    });
}

} // namespace

BirkhoffPair birkhoff(const Character& f) {
    LinMap minus = minus_map(f);
    LinMap plus(f.tag(), [f, minus](const Forest& x) {
        if (x.is_unit()) return LaurentPoly(Rational(1));
        return pi_plus(bogoliubov_value(f, minus, x));
    });
    return BirkhoffPair{Character::from_map(minus), Character::from_map(std::move(plus))};
}

LinMap bogoliubov(const Character& f) {
    LinMap minus = minus_map(f);
    return LinMap(f.tag(), [f, minus](const Forest& x) {
        if (x.is_unit()) return LaurentPoly();
        return bogoliubov_value(f, minus, x);
    });
}

BirkhoffPair birkhoff_series_oracle(const Character& f, int max_degree) {
    const Alg tag = f.tag();
    const LinMap e = counit_map(tag);
    LinMap fm = f.map();
    LinMap finv = conv_inverse_map(fm);
    LinMap lambda(tag, [e, fm](const Forest& x) { return e(x) - fm(x); });
    LinMap xi(tag, [e, finv](const Forest& x) { return e(x) - finv(x); });

    LinMap minus = e;
    LinMap plus = e;
    for (int i = 0; i < max_degree + 1; ++i) {
        LinMap pm = convolve(minus, lambda).map_values([](const LaurentPoly& v) { return pi_minus(v); });
        minus = LinMap(tag, [e, pm](const Forest& x) { return e(x) + pm(x); });
        LinMap pp = convolve(plus, xi).map_values([](const LaurentPoly& v) { return pi_plus(v); });
        plus = LinMap(tag, [e, pp](const Forest& x) { return e(x) + pp(x); });
    }
    return BirkhoffPair{Character::from_map(minus), Character::from_map(plus)};
}

} // namespace hopfrg
