#pragma once

#include "hopfrg/character.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfrg {

// Character definition, as read from a file section
//
//   [char NAME on H]
//   [] = z^-1
//   [[]] = -1/2*z^-2 + (1+t)*z^0
//   default = 0
//
// or from an inline "--def NAME[ on H|K]: <forest>=<value>; ..." string.
// Generators are single trees; unknown generators are 0, so the empty body
// is the convolution unit e. Whether the table is used multiplicatively or
// infinitesimally is decided by the operation consuming it.
struct CharDef {
    std::string name;
    std::optional<Alg> tag; // absent only for inline defs without "on"
    std::map<Tree, LaurentPoly> values;
};

std::vector<CharDef> parse_char_file(std::string_view text, const ParamSet& params = ParamSet());
CharDef parse_char_def(std::string_view text, const ParamSet& params = ParamSet());

std::string render_char_def(const CharDef& def);

// Coerce a definition to the algebra an operation needs; an explicit tag
// must match, an untagged definition adopts it (K re-validates the keys).
Character as_character(const CharDef& def, Alg required);
InfChar as_infchar(const CharDef& def, Alg required);

} // namespace hopfrg
