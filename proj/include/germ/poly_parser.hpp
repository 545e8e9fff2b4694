#pragma once

#include <optional>
#include <set>
#include <string>

#include "germ/polynomial.hpp"

namespace germ {

// Parses the polynomial text syntax: identifiers as variables, `+ - * ^`,
// rational literals `a/b`, parentheses. Implicit multiplication is a syntax
// error. If `allowed_vars` is given, any other identifier is rejected.
Polynomial parse_polynomial(const std::string& text,
                            const std::set<std::string>* allowed_vars = nullptr);

}  // namespace germ
