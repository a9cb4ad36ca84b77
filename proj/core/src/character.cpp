#include "hopfrg/character.hpp"

#include "hopfrg/errors.hpp"

#include <mutex>

namespace hopfrg {

struct LinMap::State {
    Alg tag;
    Fn fn;
    std::mutex mu;
    std::map<Forest, LaurentPoly> memo;
};

LinMap::LinMap(Alg tag, Fn fn) : state_(std::make_shared<State>()) {
    state_->tag = tag;
    state_->fn = std::move(fn);
}

LinMap LinMap::recursive(Alg tag, std::function<LaurentPoly(const LinMap&, const Forest&)> fn) {
    auto state = std::make_shared<State>();
    state->tag = tag;
    // the self handle shares the state so recursive calls hit the memo;
    // held weakly inside fn to avoid a state -> fn -> state cycle
    std::weak_ptr<State> weak = state;
    state->fn = [fn = std::move(fn), weak](const Forest& f) {
        return fn(LinMap(weak.lock()), f);
    };
    return LinMap(std::move(state));
}

Alg LinMap::tag() const { return state_->tag; }

LaurentPoly LinMap::operator()(const Forest& f) const {
    require_basis(state_->tag, f);
    {
        std::lock_guard lk(state_->mu);
        auto it = state_->memo.find(f);
        if (it != state_->memo.end()) return it->second;
    }
    LaurentPoly v = state_->fn(f);
    std::lock_guard lk(state_->mu);
    return state_->memo.emplace(f, std::move(v)).first->second;
}

LaurentPoly LinMap::eval(const LinComb& x) const {
    if (x.tag() != state_->tag) throw DomainError("LinMap::eval: tag mismatch");
    LaurentPoly total;
    for (const auto& [f, c] : x.terms()) total += (*this)(f)*c;
    return total;
}

LinMap LinMap::map_values(std::function<LaurentPoly(const LaurentPoly&)> transform) const {
    LinMap base = *this;
    return LinMap(state_->tag, [base, transform = std::move(transform)](const Forest& f) {
        return transform(base(f));
    });
}

LinMap counit_map(Alg tag) {
    return LinMap(tag, [](const Forest& f) {
        return f.is_unit() ? LaurentPoly(Rational(1)) : LaurentPoly();
    });
}

LinMap convolve(const LinMap& f, const LinMap& g) {
    if (f.tag() != g.tag()) throw DomainError("convolve: tag mismatch");
    const Alg tag = f.tag();
    return LinMap(tag, [tag, f, g](const Forest& x) {
        LaurentPoly total;
        for (const auto& [legs, c] : delta(tag, x).terms())
            total += (f(legs.first) * g(legs.second)) * c;
        return total;
    });
}

// ---------------------------------------------------------------------------
// Character / InfChar

Character Character::from_generators(Alg tag, std::map<Tree, LaurentPoly> gens) {
    if (tag == Alg::K)
        for (const auto& [t, v] : gens)
            if (t.edge_count() < 1)
                throw DomainError("K-character generator must have an edge: " + t.render());
    auto shared = std::make_shared<const std::map<Tree, LaurentPoly>>(std::move(gens));
    LinMap m(tag, [shared](const Forest& f) {
        LaurentPoly v(Rational(1));
        for (const Tree& t : f.trees()) {
            auto it = shared->find(t);
            if (it == shared->end()) return LaurentPoly(); // unknown generator -> 0
            v = v * it->second;
        }
        return v;
    });
    return Character(std::move(m), std::move(shared));
}

Character Character::from_map(LinMap m) { return Character(std::move(m), nullptr); }

const std::map<Tree, LaurentPoly>* Character::generators() const { return gens_.get(); }

Character Character::map_values(std::function<LaurentPoly(const LaurentPoly&)> transform) const {
    return Character(map_.map_values(std::move(transform)), nullptr);
}

InfChar InfChar::from_generators(Alg tag, std::map<Tree, LaurentPoly> gens) {
    if (tag == Alg::K)
        for (const auto& [t, v] : gens)
            if (t.edge_count() < 1)
                throw DomainError("K-infinitesimal generator must have an edge: " + t.render());
    auto shared = std::make_shared<const std::map<Tree, LaurentPoly>>(std::move(gens));
    LinMap m(tag, [shared](const Forest& f) {
        if (!f.is_single_tree()) return LaurentPoly(); // unit and products vanish
        auto it = shared->find(f.trees().front());
        return it == shared->end() ? LaurentPoly() : it->second;
    });
    return InfChar(std::move(m), std::move(shared));
}

InfChar InfChar::from_map(LinMap m) { return InfChar(std::move(m), nullptr); }

const std::map<Tree, LaurentPoly>* InfChar::generators() const { return gens_.get(); }

InfChar InfChar::map_values(std::function<LaurentPoly(const LaurentPoly&)> transform) const {
    if (gens_) {
        std::map<Tree, LaurentPoly> gens;
        for (const auto& [t, v] : *gens_) gens.emplace(t, transform(v));
        return from_generators(tag(), std::move(gens));
    }
    return InfChar(map_.map_values(std::move(transform)), nullptr);
}

// ---------------------------------------------------------------------------
// Inverse, exponential, logarithm

LinMap conv_inverse_map(const LinMap& f) {
    const Alg tag = f.tag();
    return LinMap(tag, [tag, f](const Forest& x) { return f.eval(antipode(tag, x)); });
}

Character conv_inverse(const Character& f) {
    return Character::from_map(conv_inverse_map(f.map()));
}

namespace {

// Shared list of convolution powers base^{*0}, base^{*1}, ... extended on
// demand; the closure that owns it serializes extension.
struct PowerTable {
    std::mutex mu;
    std::vector<LinMap> powers;
};

} // namespace

Character conv_exp(const InfChar& a) {
    const Alg tag = a.tag();
    auto table = std::make_shared<PowerTable>();
    table->powers.push_back(counit_map(tag));
    LinMap base = a.map();
    LinMap m(tag, [tag, table, base](const Forest& x) {
        const int top = degree(tag, x); // a kills the unit, so the series stops here
        {
            std::lock_guard lk(table->mu);
            while (static_cast<int>(table->powers.size()) <= top)
                table->powers.push_back(convolve(base, table->powers.back()));
        }
        LaurentPoly total;
        for (int n = 0; n <= top; ++n) {
            LinMap pn = [&] {
                std::lock_guard lk(table->mu);
                return table->powers[static_cast<std::size_t>(n)];
            }();
            total += pn(x) * (Rational(1) / factorial(n));
        }
        return total;
    });
    return Character::from_map(std::move(m));
}

InfChar conv_log(const Character& f) {
    const Alg tag = f.tag();
    LinMap e = counit_map(tag);
    LinMap fm = f.map();
    LinMap reduced(tag, [fm, e](const Forest& x) { return fm(x) - e(x); });
    auto table = std::make_shared<PowerTable>();
    table->powers.push_back(e);
    LinMap m(tag, [tag, table, reduced](const Forest& x) {
        const int top = degree(tag, x);
        {
            std::lock_guard lk(table->mu);
            while (static_cast<int>(table->powers.size()) <= top)
                table->powers.push_back(convolve(reduced, table->powers.back()));
        }
        LaurentPoly total;
        for (int n = 1; n <= top; ++n) {
            LinMap pn = [&] {
                std::lock_guard lk(table->mu);
                return table->powers[static_cast<std::size_t>(n)];
            }();
            const Rational c = Rational(n % 2 == 1 ? 1 : -1) / n;
            total += pn(x) * c;
        }
        return total;
    });
    return InfChar::from_map(std::move(m));
}

// ---------------------------------------------------------------------------
// Brute-force property checks

bool is_multiplicative(const LinMap& f, int max_degree) {
    const Alg tag = f.tag();
    if (!(f(Forest::unit()) == LaurentPoly(Rational(1)))) return false;
    const auto basis = tag == Alg::H ? enumerate_forests(max_degree) : enumerate_k_forests(max_degree);
    for (const Forest& x : basis) {
        if (x.is_unit()) continue;
        for (const Forest& y : basis) {
            if (y.is_unit() || y < x) continue;
            if (degree(tag, x) + degree(tag, y) > max_degree) continue;
            if (!(f(forest_product(x, y)) == f(x) * f(y))) return false;
        }
    }
    return true;
}

bool is_infinitesimal(const LinMap& f, int max_degree) {
    const Alg tag = f.tag();
    if (!f(Forest::unit()).is_zero()) return false;
    const auto basis = tag == Alg::H ? enumerate_forests(max_degree) : enumerate_k_forests(max_degree);
    for (const Forest& x : basis) {
        if (x.is_unit()) continue;
        for (const Forest& y : basis) {
            if (y.is_unit() || y < x) continue;
            if (degree(tag, x) + degree(tag, y) > max_degree) continue;
            if (!f(forest_product(x, y)).is_zero()) return false;
        }
    }
    return true;
}

bool agree_up_to(const LinMap& f, const LinMap& g, int max_degree) {
    if (f.tag() != g.tag()) return false;
    const auto basis =
        f.tag() == Alg::H ? enumerate_forests(max_degree) : enumerate_k_forests(max_degree);
    for (const Forest& x : basis)
        if (!(f(x) == g(x))) return false;
    return true;
}

} // namespace hopfrg
