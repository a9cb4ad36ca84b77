#include "hopfrg/charfile.hpp"

#include "hopfrg/errors.hpp"

#include <cctype>
#include <sstream>

namespace hopfrg {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

Alg parse_tag(const std::string& word, std::size_t pos) {
    if (word == "H") return Alg::H;
    if (word == "K") return Alg::K;
    throw ParseError("expected algebra tag 'H' or 'K', got '" + word + "'", pos);
}

// "NAME" or "NAME on H|K"
void parse_name_and_tag(const std::string& head, std::size_t pos, CharDef& def) {
    std::istringstream in(head);
    std::string name, on, tag;
    in >> name;
    if (name.empty()) throw ParseError("missing character name", pos);
    def.name = name;
    if (in >> on) {
        if (on != "on") throw ParseError("expected 'on' after character name", pos);
        if (!(in >> tag)) throw ParseError("missing algebra tag after 'on'", pos);
        def.tag = parse_tag(tag, pos);
        std::string extra;
        if (in >> extra) throw ParseError("unexpected text after algebra tag", pos);
    }
}

Tree parse_generator(const std::string& text, std::size_t pos) {
    Forest f = parse_forest(text);
    if (!f.is_single_tree())
        throw ParseError("generator must be a single tree, got '" + f.render() + "'", pos);
    return f.trees().front();
}

void parse_assignment(const std::string& line, std::size_t pos, const ParamSet& params,
                      CharDef& def) {
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected '<forest> = <value>'", pos);
    const std::string lhs = trim(line.substr(0, eq));
    const std::string rhs = trim(line.substr(eq + 1));
    if (lhs == "default") {
        if (rhs != "0") throw ParseError("only 'default = 0' is supported", pos);
        return; // unknown generators are 0 regardless
    }
    Tree gen = parse_generator(lhs, pos);
    LaurentPoly value = parse_laurent(rhs, params);
    if (def.values.count(gen))
        throw ParseError("duplicate generator '" + gen.render() + "'", pos);
    if (!value.is_zero()) def.values.emplace(std::move(gen), std::move(value));
}

} // namespace

std::vector<CharDef> parse_char_file(std::string_view text, const ParamSet& params) {
    std::vector<CharDef> defs;
    std::size_t pos = 0;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        const std::size_t nl = text.find('\n', line_start);
        const std::string line =
            trim(text.substr(line_start, nl == std::string_view::npos ? text.size() - line_start
                                                                      : nl - line_start));
        pos = line_start;
        line_start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']' && line.rfind("[char ", 0) == 0) {
            CharDef def;
            parse_name_and_tag(trim(line.substr(6, line.size() - 7)), pos, def);
            if (!def.tag) throw ParseError("file header requires 'on H' or 'on K'", pos);
            defs.push_back(std::move(def));
            continue;
        }
        if (defs.empty()) throw ParseError("expected '[char NAME on H|K]' header", pos);
        parse_assignment(line, pos, params, defs.back());
    }
    return defs;
}

CharDef parse_char_def(std::string_view text, const ParamSet& params) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("expected 'NAME: <forest>=<value>; ...'", 0);
    CharDef def;
    parse_name_and_tag(trim(text.substr(0, colon)), 0, def);
    std::size_t start = colon + 1;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        if (semi == std::string_view::npos) semi = text.size();
        const std::string entry = trim(text.substr(start, semi - start));
        if (!entry.empty()) parse_assignment(entry, start, params, def);
        start = semi + 1;
    }
    return def;
}

std::string render_char_def(const CharDef& def) {
    std::string out = "[char " + def.name;
    if (def.tag) out += std::string(" on ") + alg_name(*def.tag);
    out += "]\n";
    for (const auto& [t, v] : def.values) out += t.render() + " = " + v.render() + "\n";
    if (def.values.empty()) out += "default = 0\n";
    return out;
}

namespace {

void check_tag(const CharDef& def, Alg required) {
    if (def.tag && *def.tag != required)
        throw DomainError("character '" + def.name + "' is declared on " + alg_name(*def.tag) +
                          " but is used on " + alg_name(required));
    if (required == Alg::K)
        for (const auto& [t, v] : def.values)
            if (t.edge_count() < 1)
                throw DomainError("character '" + def.name + "' has the edgeless generator '" +
                                  t.render() + "', not a K-generator");
}

} // namespace

Character as_character(const CharDef& def, Alg required) {
    check_tag(def, required);
    return Character::from_generators(required, def.values);
}

InfChar as_infchar(const CharDef& def, Alg required) {
    check_tag(def, required);
    return InfChar::from_generators(required, def.values);
}

} // namespace hopfrg
