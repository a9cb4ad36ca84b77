#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfrg {

// Syntax error in one of the text grammars (forests, Laurent values,
// character files). `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Requested the z^0 coefficient of a value that still has a pole at z = 0.
class PoleAtZero : public std::runtime_error {
public:
    explicit PoleAtZero(std::string what) : std::runtime_error(std::move(what)) {}
};

// Contract violation: tag mismatch, non-K-normal basis element, bad argument.
class DomainError : public std::logic_error {
public:
    explicit DomainError(std::string what) : std::logic_error(std::move(what)) {}
};

} // namespace hopfrg
