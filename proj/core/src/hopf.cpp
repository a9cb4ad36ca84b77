#include "hopfrg/hopf.hpp"

#include "hopfrg/errors.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace hopfrg {

namespace {

// Once-per-key memo tables. Duplicate concurrent computation is allowed;
// the first inserted value wins and is the one everybody sees. Entries are
// never removed and std::map nodes do not move, so returned references
// stay valid for the life of the process.
template <typename V>
class Memo {
public:
    template <typename F>
    const V& get(Alg tag, const Forest& f, F&& compute) {
        {
            std::lock_guard lk(mu_);
            auto it = map_.find({tag, f});
            if (it != map_.end()) return it->second;
        }
        V v = compute();
        std::lock_guard lk(mu_);
        return map_.emplace(std::make_pair(tag, f), std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::pair<Alg, Forest>, V> map_;
};

Memo<Tensor>& delta_memo() {
    static Memo<Tensor> m;
    return m;
}
Memo<Tensor>& reduced_delta_memo() {
    static Memo<Tensor> m;
    return m;
}
Memo<Tensor>& coaction_memo() {
    static Memo<Tensor> m;
    return m;
}
Memo<LinComb>& antipode_memo() {
    static Memo<LinComb> m;
    return m;
}
Memo<LinComb>& antipode_alt_memo() {
    static Memo<LinComb> m;
    return m;
}

Tensor delta_tree_h(const Tree& t) {
    Tensor d(Alg::H, Alg::H);
    Forest ft = Forest::single(t);
    d.add(ft, Forest::unit(), 1);
    d.add(Forest::unit(), ft, 1);
    for (const CutTerm& c : admissible_cuts(t)) d.add(c.pruned, Forest::single(c.root_part), 1);
    return d;
}

} // namespace

const Tensor& delta(Alg tag, const Forest& f) {
    require_basis(tag, f);
    return delta_memo().get(tag, f, [&] {
        if (tag == Alg::H) {
            Tensor d = Tensor::basis(Alg::H, Alg::H, Forest::unit(), Forest::unit());
            for (const Tree& t : f.trees()) d = d.mul(delta_tree_h(t));
            return d;
        }
        Tensor d(Alg::K, Alg::K);
        for (const SubforestTerm& s : subforests(f)) d.add(s.extracted, k_normalize(s.contracted), 1);
        return d;
    });
}

Tensor delta(Alg tag, const LinComb& x) {
    if (x.tag() != tag) throw DomainError("delta: tag mismatch");
    Tensor d(tag, tag);
    for (const auto& [f, c] : x.terms()) d += delta(tag, f) * c;
    return d;
}

const Tensor& reduced_delta(Alg tag, const Forest& f) {
    return reduced_delta_memo().get(tag, f, [&] {
        if (f.is_unit()) return Tensor(tag, tag); // the unit's coproduct is all trivial
        Tensor d = delta(tag, f);
        d.add(f, Forest::unit(), -1);
        d.add(Forest::unit(), f, -1);
        return d;
    });
}

const LinComb& antipode(Alg tag, const Forest& f) {
    require_basis(tag, f);
    return antipode_memo().get(tag, f, [&] {
        if (f.is_unit()) return LinComb::unit(tag);
        LinComb s = -LinComb::basis(tag, f);
        for (const auto& [k, c] : reduced_delta(tag, f).terms())
            s -= lincomb_mul(antipode(tag, k.first), LinComb::basis(tag, k.second)) * c;
        return s;
    });
}

LinComb antipode(Alg tag, const LinComb& x) {
    if (x.tag() != tag) throw DomainError("antipode: tag mismatch");
    LinComb s(tag);
    for (const auto& [f, c] : x.terms()) s += antipode(tag, f) * c;
    return s;
}

const LinComb& antipode_alt(Alg tag, const Forest& f) {
    require_basis(tag, f);
    return antipode_alt_memo().get(tag, f, [&] {
        if (f.is_unit()) return LinComb::unit(tag);
        LinComb s = -LinComb::basis(tag, f);
        for (const auto& [k, c] : reduced_delta(tag, f).terms())
            s -= lincomb_mul(LinComb::basis(tag, k.first), antipode_alt(tag, k.second)) * c;
        return s;
    });
}

const Tensor& coaction(const Forest& f) {
    return coaction_memo().get(Alg::H, f, [&] {
        Tensor phi(Alg::K, Alg::H);
        for (const SubforestTerm& s : subforests(f)) phi.add(s.extracted, s.contracted, 1);
        return phi;
    });
}

Tensor coaction(const LinComb& x) {
    if (x.tag() != Alg::H) throw DomainError("coaction is defined on H");
    Tensor phi(Alg::K, Alg::H);
    for (const auto& [f, c] : x.terms()) phi += coaction(f) * c;
    return phi;
}

Rational counit(const Forest& f) { return f.is_unit() ? 1 : 0; }

Rational counit(const LinComb& x) { return x.coeff(Forest::unit()); }

// ---------------------------------------------------------------------------
// Axiom suites

namespace {

std::vector<Forest> basis_up_to(Alg tag, int max_degree) {
    return tag == Alg::H ? enumerate_forests(max_degree) : enumerate_k_forests(max_degree);
}

Tensor3 expand_left(Alg tag, const Tensor& t) {
    Tensor3 r(tag, tag, tag);
    for (const auto& [k, c] : t.terms())
        for (const auto& [k2, c2] : delta(tag, k.first).terms())
            r.add(k2.first, k2.second, k.second, c * c2);
    return r;
}

Tensor3 expand_right(Alg tag, const Tensor& t) {
    Tensor3 r(tag, tag, tag);
    for (const auto& [k, c] : t.terms())
        for (const auto& [k2, c2] : delta(tag, k.second).terms())
            r.add(k.first, k2.first, k2.second, c * c2);
    return r;
}

} // namespace

Report check_hopf_axioms(Alg tag, int max_degree) {
    Report rep;
    rep.suite = std::string("hopf-") + alg_name(tag);
    rep.max_degree = max_degree;
    const std::vector<Forest> basis = basis_up_to(tag, max_degree);

    for (const Forest& f : basis) {
        const Tensor d = delta(tag, f);
        const std::string item = f.render();

        // grading: leg degrees of every coproduct term sum to deg f
        bool graded = true;
        for (const auto& [k, c] : d.terms())
            if (degree(tag, k.first) + degree(tag, k.second) != degree(tag, f)) graded = false;
        ++rep.checks;
        if (!graded) rep.fail(item, "coproduct-grading", d.render(), "legs summing to deg");

        // coassociativity
        Tensor3 left = expand_left(tag, d), right = expand_right(tag, d);
        ++rep.checks;
        if (!(left == right)) rep.fail(item, "coassociativity", left.render(), right.render());

        // counit laws
        LinComb from_left(tag), from_right(tag);
        for (const auto& [k, c] : d.terms()) {
            from_left.add(k.second, c * counit(k.first));
            from_right.add(k.first, c * counit(k.second));
        }
        const LinComb self = LinComb::basis(tag, f);
        ++rep.checks;
        if (!(from_left == self)) rep.fail(item, "counit-left", from_left.render(), self.render());
        ++rep.checks;
        if (!(from_right == self)) rep.fail(item, "counit-right", from_right.render(), self.render());

        // S * Id = Id * S = u eps
        LinComb s_id(tag), id_s(tag);
        for (const auto& [k, c] : d.terms()) {
            s_id += lincomb_mul(antipode(tag, k.first), LinComb::basis(tag, k.second)) * c;
            id_s += lincomb_mul(LinComb::basis(tag, k.first), antipode(tag, k.second)) * c;
        }
        const LinComb ue = f.is_unit() ? LinComb::unit(tag) : LinComb::zero(tag);
        ++rep.checks;
        if (!(s_id == ue)) rep.fail(item, "antipode-left", s_id.render(), ue.render());
        ++rep.checks;
        if (!(id_s == ue)) rep.fail(item, "antipode-right", id_s.render(), ue.render());

        // the two antipode recursions agree, and S preserves the grading
        const LinComb s4 = antipode(tag, f), s5 = antipode_alt(tag, f);
        ++rep.checks;
        if (!(s4 == s5)) rep.fail(item, "antipode-recursions", s4.render(), s5.render());
        bool s_graded = true;
        for (const auto& [g, c] : s4.terms())
            if (degree(tag, g) != degree(tag, f)) s_graded = false;
        ++rep.checks;
        if (!s_graded) rep.fail(item, "antipode-grading", s4.render(), "homogeneous");
    }

    // coproduct is an algebra morphism
    for (const Forest& f : basis) {
        if (f.is_unit()) continue;
        for (const Forest& g : basis) {
            if (g.is_unit() || g < f) continue;
            if (degree(tag, f) + degree(tag, g) > max_degree) continue;
            const Forest fg = forest_product(f, g);
            const Tensor lhs = delta(tag, fg);
            const Tensor rhs = delta(tag, f).mul(delta(tag, g));
            ++rep.checks;
            if (!(lhs == rhs))
                rep.fail(f.render() + " | " + g.render(), "coproduct-multiplicative", lhs.render(),
                         rhs.render());
        }
    }
    return rep;
}

Report check_compatibility(int max_vertices) {
    Report rep;
    rep.suite = "compat";
    rep.max_degree = max_vertices;

    for (const Forest& f : enumerate_forests(max_vertices)) {
        const std::string item = f.render();
        const Tensor phi = coaction(f);

        // coaction grading and shape (the 1_K (x) f term has coefficient 1)
        bool graded = true;
        for (const auto& [k, c] : phi.terms())
            if (degree(Alg::K, k.first) + degree(Alg::H, k.second) != f.vertex_count())
                graded = false;
        ++rep.checks;
        if (!graded) rep.fail(item, "coaction-grading", phi.render(), "deg_K + |.| = |f|");
        ++rep.checks;
        {
            auto it = phi.terms().find({Forest::unit(), f});
            if (it == phi.terms().end() || it->second != 1)
                rep.fail(item, "coaction-shape", phi.render(), "1_K # f with coefficient 1");
        }

        // (Id (x) Delta) Phi  ==  m13 (Phi (x) Phi) Delta
        Tensor3 lhs(Alg::K, Alg::H, Alg::H);
        for (const auto& [k, c] : phi.terms())
            for (const auto& [k2, c2] : delta(Alg::H, k.second).terms())
                lhs.add(k.first, k2.first, k2.second, c * c2);

        Tensor3 rhs(Alg::K, Alg::H, Alg::H);
        for (const auto& [k, c] : delta(Alg::H, f).terms()) {
            const Tensor phi1 = coaction(k.first);
            const Tensor phi2 = coaction(k.second);
            for (const auto& [p1, c1] : phi1.terms())
                for (const auto& [p2, c2] : phi2.terms())
                    rhs.add(forest_product(p1.first, p2.first), p1.second, p2.second, c * c1 * c2);
        }
        ++rep.checks;
        if (!(lhs == rhs)) rep.fail(item, "comodule-compatibility", lhs.render(), rhs.render());

        // the coaction is coassociative over Delta_K and counital
        Tensor3 co_lhs(Alg::K, Alg::K, Alg::H);
        Tensor3 co_rhs(Alg::K, Alg::K, Alg::H);
        LinComb counital(Alg::H);
        for (const auto& [k, c] : phi.terms()) {
            for (const auto& [kk, c2] : delta(Alg::K, k.first).terms())
                co_lhs.add(kk.first, kk.second, k.second, c * c2);
            for (const auto& [hh, c2] : coaction(k.second).terms())
                co_rhs.add(k.first, hh.first, hh.second, c * c2);
            counital.add(k.second, c * counit(k.first));
        }
        ++rep.checks;
        if (!(co_lhs == co_rhs))
            rep.fail(item, "coaction-coassociativity", co_lhs.render(), co_rhs.render());
        ++rep.checks;
        if (!(counital == LinComb::basis(Alg::H, f)))
            rep.fail(item, "coaction-counit", counital.render(), f.render());
    }
    return rep;
}

} // namespace hopfrg
