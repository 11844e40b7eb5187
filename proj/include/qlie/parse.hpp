#pragma once

#include "qlie/basis.hpp"

#include <stdexcept>
#include <string>

namespace qlie {

/// How a bare `1` inside a word is read: as the multiplicative identity
/// (algebra contexts) or as the adjoined unit marker (extended-module
/// contexts).
enum class UnitMode { AlgebraUnit, Marker };

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Parses element text per the grammar documented in the README:
///   expr   := ['-'] term ( ('+'|'-') term )*
///   term   := factor ( '*' factor )*
///   factor := scalar | gen | '1'
///   gen    := 'e(' int ',' int ')'
///   scalar := integer | 'q' ['^' int] | '(' scalar-expr ')'
/// Generator indices are validated against n.
FreeElt parse_element(const std::string& text, int n, UnitMode mode = UnitMode::AlgebraUnit);

}  // namespace qlie
