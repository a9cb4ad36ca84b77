#include "hopfrg/parampoly.hpp"

#include "hopfrg/errors.hpp"

namespace hopfrg {

ParamPoly::ParamPoly(const Rational& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

ParamPoly ParamPoly::variable(const std::string& name) {
    ParamPoly p;
    p.terms_[Monomial{{name, 1}}] = 1;
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    Rational& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    r += o;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [name, e] : mb) m[name] += e;
            r.add_term(m, ca * cb);
        }
    return r;
}

ParamPoly ParamPoly::pow(int n) const {
    if (n < 0) throw DomainError("ParamPoly::pow: negative exponent");
    ParamPoly r(Rational(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

ParamPoly ParamPoly::derivative(const std::string& name) const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(name);
        if (it == m.end()) continue;
        Monomial d = m;
        if (it->second == 1)
            d.erase(name);
        else
            d[name] = it->second - 1;
        r.add_term(d, c * it->second);
    }
    return r;
}

ParamPoly ParamPoly::substitute(const std::string& name, const ParamPoly& value) const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(name);
        if (it == m.end()) {
            r.add_term(m, c);
            continue;
        }
        Monomial rest = m;
        rest.erase(name);
        ParamPoly base;
        base.add_term(rest, c);
        r += base * value.pow(it->second);
    }
    return r;
}

bool ParamPoly::depends_on(const std::string& name) const {
    for (const auto& [m, c] : terms_)
        if (m.count(name)) return true;
    return false;
}

std::string ParamPoly::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string body;
        for (const auto& [name, e] : m) {
            if (!body.empty()) body += '*';
            body += name;
            if (e != 1) body += "^" + std::to_string(e);
        }
        std::string term;
        if (body.empty())
            term = render_rational(c);
        else if (c == 1)
            term = body;
        else
            term = render_rational(c) + "*" + body;
        if (!first && term[0] != '-') out += '+';
        out += term;
        first = false;
    }
    return out;
}

} // namespace hopfrg
