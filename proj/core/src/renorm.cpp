#include "hopfrg/renorm.hpp"

#include "hopfrg/errors.hpp"

#include <mutex>
#include <optional>
#include <vector>

namespace hopfrg {

void AValuedComb::add(const Forest& f, const LaurentPoly& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(f, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AValuedComb AValuedComb::operator+(const AValuedComb& o) const {
    AValuedComb r = *this;
    for (const auto& [f, v] : o.terms_) r.add(f, v);
    return r;
}

AValuedComb AValuedComb::scale(const LaurentPoly& v) const {
    AValuedComb r;
    for (const auto& [f, w] : terms_) r.add(f, w * v);
    return r;
}

std::string AValuedComb::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [f, v] : terms_) {
        if (!first) out += " + ";
        out += "(" + v.render() + ")*" + f.render();
        first = false;
    }
    return out;
}

AValuedComb b_alpha(const InfChar& alpha, const Forest& x) {
    if (alpha.tag() != Alg::K) throw DomainError("b_alpha: alpha must live on K");
    AValuedComb r;
    for (const auto& [legs, c] : coaction(x).terms()) r.add(legs.second, alpha(legs.first) * c);
    return r;
}

AValuedComb b_alpha(const InfChar& alpha, const LinComb& x) {
    if (x.tag() != Alg::H) throw DomainError("b_alpha: x must live in H");
    AValuedComb r;
    for (const auto& [f, c] : x.terms()) {
        const AValuedComb bf = b_alpha(alpha, f);
        for (const auto& [h, v] : bf.terms()) r.add(h, v * c);
    }
    return r;
}

AValuedComb e_alpha(const InfChar& alpha, const Forest& x) {
    AValuedComb r;
    for (const auto& [legs, c] : delta(Alg::H, x).terms()) {
        const AValuedComb bx = b_alpha(alpha, legs.second);
        if (bx.is_zero()) continue;
        for (const auto& [u, ru] : antipode(Alg::H, legs.first).terms())
            for (const auto& [h, v] : bx.terms()) r.add(forest_product(u, h), v * (c * ru));
    }
    return r;
}

LaurentPoly apply_linmap(const LinMap& phi, const AValuedComb& v) {
    LaurentPoly total;
    for (const auto& [h, a] : v.terms()) total += a * phi(h);
    return total;
}

LinMap star_action(const LinMap& beta, const LinMap& phi) {
    if (beta.tag() != Alg::K || phi.tag() != Alg::H)
        throw DomainError("star_action: expected a K-map acting on an H-map");
    return LinMap(Alg::H, [beta, phi](const Forest& x) {
        LaurentPoly total;
        for (const auto& [legs, c] : coaction(x).terms())
            total += (beta(legs.first) * phi(legs.second)) * c;
        return total;
    });
}

Character z_twist(const Character& g, bool inverse) {
    if (g.tag() != Alg::K) throw DomainError("z_twist acts on K-characters");
    const int shift = inverse ? -1 : 1;
    InfChar lg = conv_log(g).map_values(
        [shift](const LaurentPoly& v) { return v.shift_z(shift); });
    return conv_exp(lg);
}

Character FlowCharacter::at(const ParamPoly& value) const {
    const std::string name = param;
    return character.map_values(
        [name, value](const LaurentPoly& v) { return subst_param(v, name, value); });
}

namespace {

const std::map<Tree, LaurentPoly>& require_generators(const InfChar& a, const char* who) {
    const auto* gens = a.generators();
    if (!gens) throw DomainError(std::string(who) + ": needs a generator-backed infinitesimal character");
    return *gens;
}

} // namespace

FlowCharacter flow(const Character& phi, const InfChar& alpha, const std::string& t_name) {
    if (phi.tag() != Alg::H) throw DomainError("flow: phi must live on H");
    for (const auto& [t, v] : require_generators(alpha, "flow"))
        if (!v.in_a_plus())
            throw DomainError("flow: alpha(" + t.render() + ") has a pole: " + v.render());
    const ParamPoly t = ParamPoly::variable(t_name);
    InfChar tz_alpha = alpha.map_values(
        [t](const LaurentPoly& v) { return v.shift_z(1).scale(t); });
    Character e_t = conv_exp(tz_alpha);
    return FlowCharacter{Character::from_map(star_action(e_t.map(), phi.map())), t_name, phi};
}

FlowCharacter h_flow(const Character& phi, const InfChar& alpha, const std::string& t_name) {
    FlowCharacter fc = flow(phi, alpha, t_name);
    LinMap h = convolve(conv_inverse_map(phi.map()), fc.character.map());
    return FlowCharacter{Character::from_map(std::move(h)), t_name, Character::neutral(Alg::H)};
}

InfChar r_tilde(const Character& phi, const InfChar& alpha) {
    if (phi.tag() != Alg::H || alpha.tag() != Alg::K) throw DomainError("r_tilde: bad tags");
    LinMap gamma = convolve(conv_inverse_map(phi.map()), star_action(alpha.map(), phi.map()));
    return InfChar::from_map(std::move(gamma));
}

namespace {

LinMap linmap_sub(const LinMap& a, const LinMap& b) {
    return LinMap(a.tag(), [a, b](const Forest& x) { return a(x) - b(x); });
}

} // namespace

InfChar r_alpha(const InfChar& a, const InfChar& alpha, RMethod method) {
    if (a.tag() != Alg::H || alpha.tag() != Alg::K) throw DomainError("r_alpha: bad tags");
    if (method == RMethod::direct) return r_tilde(conv_exp(a), alpha);

    // integral form: sum_k (-ad a)^k / (k+1)!  applied to a o B_alpha;
    // the k-th bracket vanishes below degree k+1, so the sum is finite.
    LinMap base(Alg::H,
                [a, alpha](const Forest& x) { return apply_linmap(a.map(), b_alpha(alpha, x)); });
    auto brackets = std::make_shared<std::vector<LinMap>>();
    auto mu = std::make_shared<std::mutex>();
    brackets->push_back(base);
    LinMap am = a.map();
    LinMap m(Alg::H, [am, brackets, mu](const Forest& x) {
        const int top = std::max(x.vertex_count() - 1, 0);
        {
            std::lock_guard lk(*mu);
            while (static_cast<int>(brackets->size()) <= top) {
                const LinMap& prev = brackets->back();
                brackets->push_back(linmap_sub(convolve(am, prev), convolve(prev, am)));
            }
        }
        LaurentPoly total;
        for (int k = 0; k <= top; ++k) {
            LinMap bk = [&] {
                std::lock_guard lk(*mu);
                return (*brackets)[static_cast<std::size_t>(k)];
            }();
            const Rational c = Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1);
            total += bk(x) * c;
        }
        return total;
    });
    return InfChar::from_map(std::move(m));
}

Report locality_check(const Character& phi, const InfChar& alpha, int max_degree,
                      const std::string& t_name) {
    Report rep;
    rep.suite = "locality";
    rep.max_degree = max_degree;
    FlowCharacter fc = flow(phi, alpha, t_name);
    BirkhoffPair bp = birkhoff(fc.character);
    for (const Forest& f : enumerate_forests(max_degree)) {
        const LaurentPoly dv = d_param(bp.minus(f), t_name);
        ++rep.checks;
        if (!dv.is_zero()) rep.fail(f.render(), "locality", dv.render(), "0");
    }
    return rep;
}

FlowCharacter rg_flow(const Character& phi, const InfChar& alpha, const std::string& t_name) {
    FlowCharacter h = h_flow(phi, alpha, t_name);
    LinMap hm = h.character.map();
    LinMap f(Alg::H, [hm](const Forest& x) { return LaurentPoly(const_term(hm(x))); });
    return FlowCharacter{Character::from_map(std::move(f)), t_name, Character::neutral(Alg::H)};
}

InfChar beta(const Character& phi, const InfChar& alpha, BetaMethod method,
             const std::string& t_name) {
    switch (method) {
    case BetaMethod::generator: {
        FlowCharacter f = rg_flow(phi, alpha, t_name);
        LinMap fm = f.character.map();
        return InfChar::from_map(LinMap(Alg::H, [fm, t_name](const Forest& x) {
            return subst_param(d_param(fm(x), t_name), t_name, ParamPoly(Rational(0)));
        }));
    }
    case BetaMethod::residue: {
        InfChar gamma = r_tilde(phi, alpha);
        LinMap gm = gamma.map();
        return InfChar::from_map(
            LinMap(Alg::H, [gm](const Forest& x) { return LaurentPoly(residue(gm(x))); }));
    }
    case BetaMethod::counterterm: {
        Character minus = birkhoff(phi).minus;
        LinMap mm = minus.map();
        return InfChar::from_map(LinMap(Alg::H, [mm, alpha](const Forest& x) {
            return -LaurentPoly(residue(apply_linmap(mm, b_alpha(alpha, x))));
        }));
    }
    }
    throw DomainError("beta: unknown method");
}

// ---------------------------------------------------------------------------
// Counterterm-valued solver

namespace {

Rational constant_of(const LaurentPoly& v, int z_exp, bool* ok) {
    const ParamPoly p = v.coeff(z_exp);
    if (!p.is_constant()) {
        *ok = false;
        return 0;
    }
    return p.constant_value();
}

// Solve M u = r exactly; free variables zero. nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        std::swap(rhs[sel], rhs[row]);
        const Rational inv = Rational(1) / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        rhs[row] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
            rhs[r] -= factor * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (rhs[r] != 0) return std::nullopt;
    std::vector<Rational> u(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) u[pivot_col[i]] = rhs[i];
    return u;
}

void require_constant(const std::map<Tree, LaurentPoly>& gens, const char* who) {
    for (const auto& [t, v] : gens) {
        for (const auto& [k, p] : v.coeffs())
            if (k != 0 || !p.is_constant())
                throw DomainError(std::string(who) + "(" + t.render() +
                                  ") must be a constant, got " + v.render());
    }
}

} // namespace

LocalSolveResult construct_local_minus(const InfChar& alpha, const InfChar& chi, int max_degree) {
    if (alpha.tag() != Alg::K || chi.tag() != Alg::H)
        throw DomainError("construct_local_minus: alpha lives on K, chi on H");
    require_constant(require_generators(alpha, "construct_local_minus"), "alpha");
    require_constant(require_generators(chi, "construct_local_minus"), "chi");

    LocalSolveResult result;
    std::map<Tree, LaurentPoly> solved;

    for (int n = 1; n <= max_degree; ++n) {
        // unknowns: pole coefficients of phi on trees with n-1 vertices
        std::vector<Tree> unknowns;
        for (const Tree& t : enumerate_trees(n - 1))
            if (t.vertex_count() == n - 1) unknowns.push_back(t);

        std::vector<Forest> level;
        for (const Forest& f : enumerate_forests(n))
            if (f.vertex_count() == n) level.push_back(f);

        const Character phi_known = Character::from_generators(Alg::H, solved);
        const InfChar gamma_known = r_tilde(phi_known, alpha);

        // gamma(x) = gamma_known(x) + sum_j coeff_j(x) phi(T_j); the unknown
        // trees enter only through the coaction legs of K-degree 1.
        std::vector<std::vector<Rational>> coeff(level.size(),
                                                 std::vector<Rational>(unknowns.size(), Rational(0)));
        std::vector<LaurentPoly> rhs(level.size());
        for (std::size_t i = 0; i < level.size(); ++i) {
            const Forest& x = level[i];
            rhs[i] = chi(x).shift_z(-1) - gamma_known(x);
            for (const auto& [legs, c] : coaction(x).terms()) {
                if (!legs.second.is_single_tree()) continue;
                const Tree& h = legs.second.trees().front();
                if (h.vertex_count() != n - 1) continue;
                for (std::size_t j = 0; j < unknowns.size(); ++j)
                    if (unknowns[j] == h) {
                        bool ok = true;
                        const Rational av = constant_of(alpha(legs.first), 0, &ok);
                        if (!ok) throw DomainError("construct_local_minus: non-constant alpha value");
                        coeff[i][j] += av * c;
                    }
            }
        }

        // the same rational matrix applies to every z power; solve per power
        int low = -(n - 1), high = -1;
        for (std::size_t i = 0; i < level.size(); ++i)
            for (const auto& [k, p] : rhs[i].coeffs())
                if ((k < low || k > high) && !p.is_zero()) {
                    result.feasible = false;
                    result.failed_degree = n;
                    result.detail = "no A_- solution: residual " + rhs[i].render() + " at " +
                                    level[i].render() + " outside reachable z powers";
                    return result;
                }

        std::vector<std::map<int, Rational>> solution(unknowns.size());
        for (int k = low; k <= high; ++k) {
            std::vector<Rational> r(level.size());
            bool ok = true;
            for (std::size_t i = 0; i < level.size(); ++i) r[i] = constant_of(rhs[i], k, &ok);
            if (!ok) throw DomainError("construct_local_minus: non-constant residual");
            auto u = solve_linear(coeff, r);
            if (!u) {
                result.feasible = false;
                result.failed_degree = n;
                result.detail = "inconsistent linear system at degree " + std::to_string(n) +
                                ", z^" + std::to_string(k);
                return result;
            }
            for (std::size_t j = 0; j < unknowns.size(); ++j)
                if ((*u)[j] != 0) solution[j][k] = (*u)[j];
        }
        for (std::size_t j = 0; j < unknowns.size(); ++j) {
            LaurentPoly v;
            for (const auto& [k, c] : solution[j]) v += LaurentPoly::z_power(k) * c;
            if (!v.is_zero()) solved[unknowns[j]] = v;
        }
    }

    result.feasible = true;
    result.phi = Character::from_generators(Alg::H, solved);
    result.locality = locality_check(result.phi, alpha, max_degree);
    return result;
}

} // namespace hopfrg
