#pragma once

#include <string>
#include <vector>

#include "proslm/clause.hpp"
#include "proslm/term.hpp"

namespace proslm {

// Recursive-descent parser for the clause language:
//
//   program    := clause*
//   clause     := head (':-' goals)? '.'
//   goals      := goal (',' goal)*
//   goal       := comparison | callable
//   comparison := arith ('>'|'<'|'>='|'=<'|'='|'is') arith
//   arith      := product (('+'|'-') product)*
//   product    := primary (('*'|'//') primary)*
//   primary    := integer | variable | atom ('(' goal (',' goal)* ')')?
//               | '[' (goal (',' goal)* ('|' variable)?)? ']'
//               | '(' goal ')'
//
// Comparisons parse to binary compounds: Hour > Opening is '>'(Hour, Opening).
// Heads must be atoms or compounds with identifier functors; body goals must
// be callable (atom, compound, or comparison). Integer leading zeros
// normalize (01 parses as 1).

std::vector<Clause> parse_program(const std::string& text,
                                  const std::string& source = "<input>");

// Comma-separated goal conjunction; the trailing period is optional.
std::vector<TermPtr> parse_query(const std::string& text);

// A single term, mainly for tests and tools.
TermPtr parse_term(const std::string& text);

}  // namespace proslm
