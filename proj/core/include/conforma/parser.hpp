#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "conforma/poly.hpp"

namespace conforma {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Context for the expression grammar: which parameter symbols are declared,
// and optional rational bindings for names (used when a spec file abbreviates
// an integer-valued index, e.g. i = 3).
struct ParseContext {
  std::set<VarId> parameters;
  std::map<std::string, Rat> bindings;

  ParseContext& declare(const std::string& name) {
    parameters.insert(intern_symbol(name));
    return *this;
  }
  ParseContext& bind(const std::string& name, const Rat& value) {
    bindings[name] = value;
    return *this;
  }
};

// Grammar (ASCII, whitespace-insensitive):
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary ('^' uint)?
//   primary := rational | name | '(' expr ')'
//   rational:= uint ('/' uint)?
// Names: d, l, m, n are the reserved indeterminates; any other name must be a
// declared parameter or a binding. Throws ParseError with position.
Poly parse_poly(const std::string& text, const ParseContext& ctx = {});

}  // namespace conforma
