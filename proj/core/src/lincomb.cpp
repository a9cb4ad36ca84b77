#include "hopfrg/lincomb.hpp"

#include "hopfrg/errors.hpp"

#include <algorithm>
#include <vector>

namespace hopfrg {

int degree(Alg a, const Forest& f) {
    return a == Alg::H ? f.vertex_count() : f.edge_count();
}

void require_basis(Alg a, const Forest& f) {
    if (a == Alg::K && !f.is_k_normal())
        throw DomainError("forest '" + f.render() + "' is not a K-basis element");
}

LinComb LinComb::unit(Alg tag) {
    LinComb r(tag);
    r.add(Forest::unit(), 1);
    return r;
}

LinComb LinComb::basis(Alg tag, const Forest& f) {
    LinComb r(tag);
    r.add(f, 1);
    return r;
}

Rational LinComb::coeff(const Forest& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LinComb::add(const Forest& f, const Rational& c) {
    if (c == 0) return;
    require_basis(tag_, f);
    Rational& slot = terms_[f];
    slot += c;
    if (slot == 0) terms_.erase(f);
}

LinComb& LinComb::operator+=(const LinComb& o) {
    if (tag_ != o.tag_) throw DomainError("LinComb tag mismatch");
    for (const auto& [f, c] : o.terms_) add(f, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    if (tag_ != o.tag_) throw DomainError("LinComb tag mismatch");
    for (const auto& [f, c] : o.terms_) add(f, -c);
    return *this;
}

LinComb LinComb::operator+(const LinComb& o) const {
    LinComb r = *this;
    r += o;
    return r;
}

LinComb LinComb::operator-(const LinComb& o) const {
    LinComb r = *this;
    r -= o;
    return r;
}

LinComb LinComb::operator-() const {
    LinComb r(tag_);
    for (const auto& [f, c] : terms_) r.add(f, -c);
    return r;
}

LinComb LinComb::operator*(const Rational& c) const {
    LinComb r(tag_);
    for (const auto& [f, k] : terms_) r.add(f, k * c);
    return r;
}

LinComb lincomb_mul(const LinComb& a, const LinComb& b) {
    if (a.tag() != b.tag()) throw DomainError("LinComb tag mismatch");
    LinComb r(a.tag());
    for (const auto& [fa, ca] : a.terms())
        for (const auto& [fb, cb] : b.terms()) r.add(forest_product(fa, fb), ca * cb);
    return r;
}

namespace {

// Shared term formatting: "<forest>" when the coefficient is 1, else
// "c*<forest>"; negative coefficients keep their sign.
std::string term_str(const Rational& c, const std::string& body) {
    if (c == 1) return body;
    return render_rational(c) + "*" + body;
}

std::string join_terms(std::vector<std::pair<Rational, std::string>> terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out += " + ";
        out += term_str(terms[i].first, terms[i].second);
    }
    return out;
}

} // namespace

std::string LinComb::render() const {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [f, c] : terms_) terms.emplace_back(c, f.render());
    return join_terms(std::move(terms));
}

Tensor Tensor::basis(Alg l, Alg r, const Forest& fl, const Forest& fr) {
    Tensor t(l, r);
    t.add(fl, fr, 1);
    return t;
}

void Tensor::add(const Forest& l, const Forest& r, const Rational& c) {
    if (c == 0) return;
    require_basis(left_, l);
    require_basis(right_, r);
    Rational& slot = terms_[{l, r}];
    slot += c;
    if (slot == 0) terms_.erase({l, r});
}

Tensor& Tensor::operator+=(const Tensor& o) {
    if (left_ != o.left_ || right_ != o.right_) throw DomainError("Tensor tag mismatch");
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

Tensor Tensor::operator-(const Tensor& o) const {
    if (left_ != o.left_ || right_ != o.right_) throw DomainError("Tensor tag mismatch");
    Tensor r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
    return r;
}

Tensor Tensor::operator*(const Rational& c) const {
    Tensor r(left_, right_);
    for (const auto& [k, k2] : terms_) r.add(k.first, k.second, k2 * c);
    return r;
}

Tensor Tensor::mul(const Tensor& o) const {
    if (left_ != o.left_ || right_ != o.right_) throw DomainError("Tensor tag mismatch");
    Tensor r(left_, right_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add(forest_product(ka.first, kb.first), forest_product(ka.second, kb.second), ca * cb);
    return r;
}

// Tensor terms print sorted by (right leg, left leg) rendering; this is the
// canonical order used by the CLI golden tests.
std::string Tensor::render() const {
    std::vector<std::pair<Rational, std::string>> terms;
    std::vector<const std::pair<const std::pair<Forest, Forest>, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        auto ka = std::make_pair(a->first.second.render(), a->first.first.render());
        auto kb = std::make_pair(b->first.second.render(), b->first.first.render());
        return ka < kb;
    });
    for (auto* t : order)
        terms.emplace_back(t->second, t->first.first.render() + " # " + t->first.second.render());
    return join_terms(std::move(terms));
}

void Tensor3::add(const Forest& a, const Forest& b, const Forest& c, const Rational& coef) {
    if (coef == 0) return;
    require_basis(tags_[0], a);
    require_basis(tags_[1], b);
    require_basis(tags_[2], c);
    std::array<Forest, 3> key{a, b, c};
    Rational& slot = terms_[key];
    slot += coef;
    if (slot == 0) terms_.erase(key);
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    if (tags_ != o.tags_) throw DomainError("Tensor3 tag mismatch");
    Tensor3 r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k[0], k[1], k[2], -c);
    return r;
}

std::string Tensor3::render() const {
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [k, c] : terms_)
        terms.emplace_back(c, k[0].render() + " # " + k[1].render() + " # " + k[2].render());
    return join_terms(std::move(terms));
}

} // namespace hopfrg
