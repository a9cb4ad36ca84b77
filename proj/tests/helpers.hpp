#pragma once

#include "hopfrg/charfile.hpp"
#include "hopfrg/errors.hpp"

#include <string>

// Shorthand constructors used throughout the tests.
inline hopfrg::Forest F(const std::string& s) { return hopfrg::parse_forest(s); }
inline hopfrg::Tree T(const std::string& s) {
    hopfrg::Forest f = hopfrg::parse_forest(s);
    return f.trees().front();
}
inline hopfrg::LaurentPoly L(const std::string& s) { return hopfrg::parse_laurent(s); }
