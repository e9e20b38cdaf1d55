#pragma once

#include <string>
#include <vector>

#include "proslm/clause.hpp"
#include "proslm/term.hpp"

namespace proslm {

// Canonical text form: one space after commas, comparisons and arithmetic
// printed infix with one space around the operator, parentheses only where
// the grammar needs them. parse(print(t)) reproduces t for every
// parser-produced term; display-only conjunction terms (functor ","), which
// the parser never produces, print as "a, b".
std::string print_term(const TermPtr& t);

// head :- body. (or head. for a fact)
std::string print_clause(const Clause& c);

// One clause per line, trailing newline.
std::string print_program(const std::vector<Clause>& clauses);

// Goals joined with ", ".
std::string print_goals(const std::vector<TermPtr>& goals);

}  // namespace proslm
