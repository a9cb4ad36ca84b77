#include "hopfrg/laurent.hpp"

#include "hopfrg/errors.hpp"

#include <cctype>

namespace hopfrg {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) coeffs_[0] = ParamPoly(c);
}

LaurentPoly::LaurentPoly(const ParamPoly& p) {
    if (!p.is_zero()) coeffs_[0] = p;
}

LaurentPoly LaurentPoly::z_power(int k) {
    LaurentPoly r;
    r.coeffs_[k] = ParamPoly(Rational(1));
    return r;
}

LaurentPoly LaurentPoly::term(int k, const ParamPoly& coeff) {
    LaurentPoly r;
    if (!coeff.is_zero()) r.coeffs_[k] = coeff;
    return r;
}

ParamPoly LaurentPoly::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? ParamPoly() : it->second;
}

void LaurentPoly::add_term(int k, const ParamPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(k, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, p] : o.coeffs_) add_term(k, p);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, p] : o.coeffs_) r.add_term(k, -p);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, p] : coeffs_) r.coeffs_[k] = -p;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ka, pa] : coeffs_)
        for (const auto& [kb, pb] : o.coeffs_) r.add_term(ka + kb, pa * pb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    return scale(ParamPoly(c));
}

LaurentPoly LaurentPoly::shift_z(int k) const {
    LaurentPoly r;
    for (const auto& [e, p] : coeffs_) r.coeffs_[e + k] = p;
    return r;
}

LaurentPoly LaurentPoly::scale(const ParamPoly& p) const {
    LaurentPoly r;
    for (const auto& [k, q] : coeffs_) r.add_term(k, q * p);
    return r;
}

bool LaurentPoly::in_a_plus() const {
    return coeffs_.empty() || coeffs_.begin()->first >= 0;
}

bool LaurentPoly::in_a_minus() const {
    return coeffs_.empty() || coeffs_.rbegin()->first < 0;
}

LaurentPoly pi_minus(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [k, p] : a.coeffs()) {
        if (k >= 0) break;
        r += LaurentPoly::term(k, p);
    }
    return r;
}

LaurentPoly pi_plus(const LaurentPoly& a) {
    return a - pi_minus(a);
}

ParamPoly residue(const LaurentPoly& a) {
    return a.coeff(-1);
}

ParamPoly const_term(const LaurentPoly& a) {
    if (!a.in_a_plus()) throw PoleAtZero("pole at z = 0 in " + a.render());
    return a.coeff(0);
}

LaurentPoly d_param(const LaurentPoly& a, const std::string& name) {
    LaurentPoly r;
    for (const auto& [k, p] : a.coeffs()) r += LaurentPoly::term(k, p.derivative(name));
    return r;
}

LaurentPoly subst_param(const LaurentPoly& a, const std::string& name, const ParamPoly& value) {
    LaurentPoly r;
    for (const auto& [k, p] : a.coeffs()) r += LaurentPoly::term(k, p.substitute(name, value));
    return r;
}

std::string LaurentPoly::render() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, p] : coeffs_) {
        std::string coef;
        if (p.is_constant()) {
            const Rational c = p.constant_value();
            coef = (c == 1) ? "" : render_rational(c) + "*";
        } else {
            coef = "(" + p.render() + ")*";
        }
        if (!first) out += " + ";
        out += coef + "z^" + std::to_string(k);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct LaurentParser {
    std::string_view text;
    const ParamSet& params;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() { return pos >= text.size(); }
    char peek() { return text[pos]; }
    bool accept(char c) {
        if (!eof() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Integer parse_integer() {
        bool neg = accept('-');
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", pos);
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text[pos++];
        Integer v(digits);
        return neg ? -v : v;
    }

    Rational parse_rational() {
        Integer num = parse_integer();
        if (accept('/')) {
            Integer den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", pos);
            return Rational(num) / Rational(den);
        }
        return Rational(num);
    }

    std::string parse_name() {
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += text[pos++];
        return name;
    }

    std::string parse_param_name() {
        std::size_t at = pos;
        std::string name = parse_name();
        if (name == "z") throw ParseError("'z' is the regulator, not a parameter", at);
        if (!params.contains(name)) throw ParseError("unknown parameter '" + name + "'", at);
        return name;
    }

    // factor := rational | name ['^' int]
    ParamPoly parse_factor() {
        skip_ws();
        if (eof()) throw ParseError("expected polynomial factor", pos);
        if (std::isdigit(static_cast<unsigned char>(peek()))) return ParamPoly(parse_rational());
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            std::string name = parse_param_name();
            int e = 1;
            if (accept('^')) {
                Integer v = parse_integer();
                if (v <= 0) throw ParseError("parameter exponent must be positive", pos);
                e = static_cast<int>(v);
            }
            ParamPoly p = ParamPoly::variable(name);
            return e == 1 ? p : p.pow(e);
        }
        throw ParseError("expected polynomial factor", pos);
    }

    ParamPoly parse_poly() {
        ParamPoly total;
        bool first = true;
        while (true) {
            skip_ws();
            if (eof()) {
                if (first) throw ParseError("expected polynomial", pos);
                break;
            }
            Rational sign = 1;
            if (first) {
                if (accept('-'))
                    sign = -1;
                else
                    accept('+');
            } else if (accept('-')) {
                sign = -1;
            } else if (!accept('+')) {
                break; // terminator, e.g. ')'
            }
            skip_ws();
            ParamPoly term = parse_factor();
            skip_ws();
            while (accept('*')) {
                skip_ws();
                term = term * parse_factor();
                skip_ws();
            }
            total += term * ParamPoly(sign);
            first = false;
        }
        return total;
    }

    // 'z' '^' int, assuming the caller saw 'z'
    int parse_z_exponent() {
        ++pos; // 'z'
        skip_ws();
        if (!accept('^')) throw ParseError("expected '^' after z", pos);
        skip_ws();
        Integer v = parse_integer();
        return static_cast<int>(v);
    }

    bool at_z() {
        // 'z' not followed by an identifier character
        if (eof() || peek() != 'z') return false;
        if (pos + 1 < text.size()) {
            char c = text[pos + 1];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return false;
        }
        return true;
    }

    LaurentPoly parse_term() {
        skip_ws();
        Rational sign = 1;
        if (accept('-')) sign = -1;
        skip_ws();
        if (eof()) throw ParseError("expected term", pos);

        ParamPoly coef(Rational(1));
        bool have_coef = false;
        if (at_z()) {
            // bare z^k
        } else if (accept('(')) {
            coef = parse_poly();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos);
            have_coef = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = ParamPoly(parse_rational());
            have_coef = true;
        } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            coef = ParamPoly::variable(parse_param_name());
            have_coef = true;
        } else {
            throw ParseError("expected coefficient or z power", pos);
        }

        int k = 0;
        skip_ws();
        if (have_coef) {
            bool star = accept('*');
            skip_ws();
            if (at_z())
                k = parse_z_exponent();
            else if (star)
                throw ParseError("expected z power after '*'", pos);
        } else {
            k = parse_z_exponent();
        }
        return LaurentPoly::term(k, coef * ParamPoly(sign));
    }

    LaurentPoly parse_value() {
        LaurentPoly total = parse_term();
        while (true) {
            skip_ws();
            if (eof()) break;
            if (accept('+')) {
                total += parse_term();
            } else if (peek() == '-') {
                total += parse_term(); // the term parser consumes the sign
            } else {
                throw ParseError("unexpected character in value", pos);
            }
        }
        return total;
    }
};

} // namespace

LaurentPoly parse_laurent(std::string_view text, const ParamSet& params) {
    LaurentParser p{text, params};
    return p.parse_value();
}

} // namespace hopfrg
